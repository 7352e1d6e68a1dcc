/*
   Copyright 2026 The ramcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ramcount/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramcount/field.hpp"

namespace ramcount {

Characteristic Characteristic::prime(int p) {
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be an odd prime or inf, got " + std::to_string(p));
    return Characteristic(p);
}

int Characteristic::value() const {
    if (p_ == 0) throw std::logic_error("characteristic zero has no prime value");
    return p_;
}

std::string Characteristic::to_string() const { return p_ == 0 ? std::string("inf") : std::to_string(p_); }

Characteristic parse_characteristic(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "0") return Characteristic::infinite();
    std::size_t pos = 0;
    int p = 0;
    try {
        p = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad characteristic '" + text + "'");
    }
    if (pos != text.size()) throw std::invalid_argument("bad characteristic '" + text + "'");
    return Characteristic::prime(p);
}

const char* to_string(CharClass c) noexcept {
    switch (c) {
        case CharClass::High: return "HIGH";
        case CharClass::Mid: return "MID";
        case CharClass::Low: return "LOW";
    }
    return "?";
}

namespace {

struct Shape {
    bool valid = false;
    int d = 0;
};

Shape shape_of(std::span<const int> orders) {
    long long total = 0;
    for (int e : orders) {
        if (e < 1) return {};
        total += e - 1;
    }
    if (total % 2 != 0) return {};
    const int d = static_cast<int>(1 + total / 2);
    for (int e : orders)
        if (e > d) return {false, d};
    return {true, d};
}

CharClass classify(std::span<const int> orders, int d, Characteristic p) {
    if (p.exceeds(d)) return CharClass::High;
    for (int e : orders)
        if (e >= p.value()) return CharClass::Low;
    return CharClass::Mid;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count exceeds 64 bits");
    return r;
}

std::string memo_key(std::vector<int> orders, Characteristic p) {
    std::sort(orders.begin(), orders.end());
    std::string key = p.to_string() + "|";
    for (int e : orders) key += std::to_string(e) + ",";
    return key;
}

std::uint64_t count_valid(const std::vector<int>& orders, int d, Characteristic p, CountMemo* memo,
                          std::vector<CountStep>* trace);

// Contribution of a sub-profile: 0 unless it is a valid instance.
std::uint64_t count_sub(const std::vector<int>& orders, Characteristic p, CountMemo* memo) {
    const Shape s = shape_of(orders);
    if (!s.valid) return 0;
    if (classify(orders, s.d, p) == CharClass::Low)
        throw std::logic_error("recursion left the mid/high characteristic range");
    return count_valid(orders, s.d, p, memo, nullptr);
}

std::uint64_t count_valid(const std::vector<int>& orders, int d, Characteristic p, CountMemo* memo,
                          std::vector<CountStep>* trace) {
    const std::size_t n = orders.size();
    if (n == 3) return p.exceeds(d) ? 1 : 0;
    std::string key;
    if (memo && !trace) {
        key = memo_key(orders, p);
        if (auto hit = memo->find(key)) return *hit;
    }
    const int en1 = orders[n - 2];
    const int en = orders[n - 1];
    const int lo = std::max(d - en1 + 1, d - en + 1);
    const int hi = p.is_infinite() ? d : std::min(d, p.value() + d - en1 - en);
    std::vector<int> sub(orders.begin(), orders.end() - 1);
    std::uint64_t total = 0;
    for (int dp = lo; dp <= hi; ++dp) {
        const int e = 2 * dp - 2 * d + en1 + en - 1;
        sub.back() = e;
        const std::uint64_t v = count_sub(sub, p, memo);
        if (trace) trace->push_back({dp, e, v});
        total = checked_add(total, v);
    }
    if (memo && !trace) memo->insert(key, total);
    return total;
}

}  // namespace

RamProfile validate_profile(std::vector<int> orders, Characteristic p) {
    if (orders.size() < 3) throw std::invalid_argument("need at least three ramification orders");
    long long total = 0;
    for (int e : orders) {
        if (e < 1) throw std::invalid_argument("ramification orders must be at least 1");
        total += e - 1;
    }
    if (total % 2 != 0) throw std::invalid_argument("total ramification sum(e_i - 1) is odd");
    RamProfile r;
    r.p = p;
    r.d = static_cast<int>(1 + total / 2);
    r.char_class = classify(orders, r.d, p);
    for (int e : orders) {
        if (!p.is_infinite() && e % p.value() == 0) r.wild = true;
        if (e > r.d) r.oversize = true;
    }
    r.orders = std::move(orders);
    return r;
}

std::optional<std::uint64_t> CountMemo::find(const std::string& key) const {
    std::lock_guard lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void CountMemo::insert(const std::string& key, std::uint64_t value) {
    std::lock_guard lock(mu_);
    table_.emplace(key, value);
}

std::size_t CountMemo::size() const {
    std::lock_guard lock(mu_);
    return table_.size();
}

void CountMemo::clear() {
    std::lock_guard lock(mu_);
    table_.clear();
}

CountMemo& shared_count_memo() {
    static CountMemo memo;
    return memo;
}

int n_three(int e1, int e2, int e3, Characteristic p, std::string* reason) {
    const int orders[] = {e1, e2, e3};
    for (int e : orders)
        if (e < 1) {
            if (reason) *reason = "order below 1";
            return 0;
        }
    if ((e1 + e2 + e3 - 3) % 2 != 0) {
        if (reason) *reason = "odd total ramification";
        return 0;
    }
    const Shape s = shape_of(orders);
    if (!s.valid) {
        if (reason) *reason = "order exceeds degree";
        return 0;
    }
    return p.exceeds(s.d) ? 1 : 0;
}

CountResult n_gen_recursive(const RamProfile& profile, CountMemo* memo) {
    CountResult r;
    r.profile = profile;
    if (profile.oversize) {
        r.value = 0;
        r.reason = "order exceeds degree";
    } else if (profile.wild) {
        r.value = 0;
        r.reason = "wild excluded";
    } else if (profile.char_class == CharClass::Low) {
        r.reason = "low characteristic";
    } else {
        r.value = count_valid(profile.orders, profile.d, profile.p, memo, &r.trace);
    }
    return r;
}

CountResult count(std::vector<int> orders, Characteristic p, CountMemo* memo) {
    return n_gen_recursive(validate_profile(std::move(orders), p), memo);
}

std::optional<std::uint64_t> n_four_closed(std::span<const int> orders, Characteristic p) {
    if (orders.size() != 4) throw std::invalid_argument("closed form needs exactly four orders");
    const RamProfile prof = validate_profile({orders.begin(), orders.end()}, p);
    if (!p.is_infinite())
        for (int e : orders)
            if (e >= p.value()) return std::nullopt;
    int m = prof.d;
    for (int e : orders) m = std::min({m, e, prof.d + 1 - e});
    const int cut = p.is_infinite() ? 0 : std::max(0, prof.d + 1 - p.value());
    return static_cast<std::uint64_t>(std::max(0, m - cut));
}

RamProfile involution_reduce(const RamProfile& profile, std::size_t i, std::size_t j) {
    if (profile.p.is_infinite()) throw std::invalid_argument("involution needs a finite characteristic");
    if (i >= profile.orders.size() || j >= profile.orders.size() || i == j)
        throw std::invalid_argument("involution indices out of range");
    if (profile.char_class == CharClass::Low) throw std::invalid_argument("involution needs mid or high characteristic");
    const int p = profile.p.value();
    if (profile.orders[i] >= p || profile.orders[j] >= p)
        throw std::invalid_argument("involution needs orders below p");
    std::vector<int> orders = profile.orders;
    orders[i] = p - orders[i];
    orders[j] = p - orders[j];
    return validate_profile(std::move(orders), profile.p);
}

}  // namespace ramcount
