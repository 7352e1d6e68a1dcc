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

#include "ramcount/field.hpp"

#include <stdexcept>

namespace ramcount {

bool is_prime(long long n) noexcept {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Coeffs = std::vector<long long>;

constexpr std::uint32_t kMaxOrder = 1u << 24;
constexpr std::uint32_t kMaxTableOrder = 1024;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long long inv_mod(long long a, long long p) {
    long long r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// Remainder of a modulo f over F_p; f nonzero.
Coeffs rem_mod(Coeffs a, const Coeffs& f, long long p) {
    trim(a);
    const long long lead_inv = inv_mod(f.back(), p);
    while (a.size() >= f.size()) {
        const long long c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - f.size();
        for (std::size_t j = 0; j < f.size(); ++j)
            a[shift + j] = ((a[shift + j] - c * f[j]) % p + p) % p;
        trim(a);
    }
    return a;
}

Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& f, long long p) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return rem_mod(std::move(r), f, p);
}

Coeffs pow_mod(Coeffs base, long long e, const Coeffs& f, long long p) {
    Coeffs r{1};
    base = rem_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = mul_mod(r, base, f, p);
        base = mul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Coeffs gcd_mod(Coeffs a, Coeffs b, long long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = rem_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool irreducible(const Coeffs& f, long long p) {
    const int k = static_cast<int>(f.size()) - 1;
    if (k <= 1) return k == 1;
    Coeffs xp{0, 1};
    for (int j = 1; j <= k / 2; ++j) {
        xp = pow_mod(xp, p, f, p);
        Coeffs h = xp;
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = ((h[1] - 1) % p + p) % p;
        trim(h);
        if (gcd_mod(h, f, p).size() > 1) return false;
    }
    return true;
}

std::vector<long long> prime_factors(std::uint64_t n) {
    std::vector<long long> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<long long>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<long long>(n));
    return out;
}

char digit_char(std::uint32_t d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    return -1;
}

}  // namespace

struct FiniteField::Impl {
    int p = 0;
    int k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp_table;  // length 2(q-1)
    std::vector<std::uint32_t> log_table;  // length q
    std::vector<std::uint32_t> neg_table;
    std::vector<std::uint32_t> add_table;  // q*q, only for small q
    std::uint32_t gen = 1;

    std::vector<long long> digits(std::uint32_t a) const {
        std::vector<long long> d(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
            d[static_cast<std::size_t>(i)] = a % static_cast<std::uint32_t>(p);
            a /= static_cast<std::uint32_t>(p);
        }
        return d;
    }

    std::uint32_t pack(const std::vector<long long>& d) const {
        std::uint32_t r = 0;
        for (int i = k - 1; i >= 0; --i)
            r = r * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(d[static_cast<std::size_t>(i)]);
        return r;
    }

    std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
        const auto up = static_cast<std::uint32_t>(p);
        std::uint32_t r = 0, place = 1;
        while (a != 0 || b != 0) {
            r += ((a % up + b % up) % up) * place;
            a /= up;
            b /= up;
            place *= up;
        }
        return r;
    }

    std::uint32_t neg_digits(std::uint32_t a) const {
        const auto up = static_cast<std::uint32_t>(p);
        std::uint32_t r = 0, place = 1;
        while (a != 0) {
            r += ((up - a % up) % up) * place;
            a /= up;
            place *= up;
        }
        return r;
    }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        const auto da = digits(a), db = digits(b);
        std::vector<long long> prod(static_cast<std::size_t>(2 * k - 1), 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    (prod[static_cast<std::size_t>(i + j)] +
                     da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
        for (int i = 2 * k - 2; i >= k; --i) {
            const long long c = prod[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            for (int j = 0; j <= k; ++j) {
                auto& slot = prod[static_cast<std::size_t>(i - k + j)];
                slot = ((slot - c * static_cast<long long>(modulus[static_cast<std::size_t>(j)])) % p + p) % p;
            }
        }
        prod.resize(static_cast<std::size_t>(k));
        return pack(prod);
    }

    std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e > 0) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    }
};

FiniteField::FiniteField(int p, int k) {
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be an odd prime, got " + std::to_string(p));
    if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^24");
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = k;
    impl->q = static_cast<std::uint32_t>(q);

    for (std::uint32_t c = 0; c < impl->q; ++c) {
        Coeffs f(static_cast<std::size_t>(k) + 1, 0);
        std::uint32_t rest = c;
        for (int i = 0; i < k; ++i) {
            f[static_cast<std::size_t>(i)] = rest % static_cast<std::uint32_t>(p);
            rest /= static_cast<std::uint32_t>(p);
        }
        f[static_cast<std::size_t>(k)] = 1;
        if (irreducible(f, p)) {
            impl->modulus.assign(f.begin(), f.end());
            break;
        }
    }

    const std::uint32_t n = impl->q - 1;
    const auto factors = prime_factors(n);
    for (std::uint32_t g = 1; g < impl->q; ++g) {
        bool primitive = true;
        for (long long r : factors)
            if (impl->pow_slow(g, n / static_cast<std::uint64_t>(r)) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            impl->gen = g;
            break;
        }
    }

    impl->exp_table.resize(2 * static_cast<std::size_t>(n));
    impl->log_table.assign(impl->q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        impl->exp_table[i] = x;
        impl->exp_table[i + n] = x;
        impl->log_table[x] = i;
        x = impl->mul_slow(x, impl->gen);
    }

    impl->neg_table.resize(impl->q);
    for (std::uint32_t a = 0; a < impl->q; ++a) impl->neg_table[a] = impl->neg_digits(a);
    if (impl->q <= kMaxTableOrder) {
        impl->add_table.resize(static_cast<std::size_t>(impl->q) * impl->q);
        for (std::uint32_t a = 0; a < impl->q; ++a)
            for (std::uint32_t b = 0; b < impl->q; ++b)
                impl->add_table[static_cast<std::size_t>(a) * impl->q + b] = impl->add_digits(a, b);
    }
    impl_ = std::move(impl);
}

int FiniteField::characteristic() const noexcept { return impl_->p; }
int FiniteField::extension_degree() const noexcept { return impl_->k; }
std::uint32_t FiniteField::order() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const noexcept { return impl_->modulus; }

Elem FiniteField::from_int(long long n) const noexcept {
    const long long p = impl_->p;
    return Elem{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Elem FiniteField::element(std::uint32_t i) const {
    if (i >= impl_->q) throw std::out_of_range("element index out of range");
    return Elem{i};
}

Elem FiniteField::generator() const noexcept { return Elem{impl_->gen}; }

Elem FiniteField::add(Elem a, Elem b) const noexcept {
    if (!impl_->add_table.empty()) return Elem{impl_->add_table[static_cast<std::size_t>(a.v) * impl_->q + b.v]};
    if (impl_->k == 1) return Elem{(a.v + b.v) % impl_->q};
    return Elem{impl_->add_digits(a.v, b.v)};
}

Elem FiniteField::neg(Elem a) const noexcept { return Elem{impl_->neg_table[a.v]}; }

Elem FiniteField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem FiniteField::mul(Elem a, Elem b) const noexcept {
    if (a.v == 0 || b.v == 0) return Elem{0};
    return Elem{impl_->exp_table[impl_->log_table[a.v] + impl_->log_table[b.v]]};
}

Elem FiniteField::inv(Elem a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t n = impl_->q - 1;
    return Elem{impl_->exp_table[(n - impl_->log_table[a.v]) % n]};
}

Elem FiniteField::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem FiniteField::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (a.v == 0) return zero();
    const std::uint64_t n = impl_->q - 1;
    return Elem{impl_->exp_table[(impl_->log_table[a.v] * (e % n)) % n]};
}

Elem FiniteField::frobenius(Elem a) const noexcept { return pow(a, static_cast<std::uint64_t>(impl_->p)); }

Elem FiniteField::pth_root(Elem a) const noexcept { return pow(a, impl_->q / static_cast<std::uint32_t>(impl_->p)); }

std::string FiniteField::format(Elem a) const {
    if (impl_->k == 1) return std::to_string(a.v);
    if (impl_->p > 36) throw std::invalid_argument("digit format needs p <= 36 when k > 1");
    const auto d = impl_->digits(a.v);
    std::string s;
    for (int i = impl_->k - 1; i >= 0; --i) s.push_back(digit_char(static_cast<std::uint32_t>(d[static_cast<std::size_t>(i)])));
    return s;
}

Elem FiniteField::parse(std::string_view s) const {
    const std::string text(s);
    if (s.empty()) throw std::invalid_argument("empty field element");
    if (impl_->k == 1) {
        std::size_t pos = 0;
        long long n = 0;
        try {
            n = std::stoll(text, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad field element '" + text + "'");
        }
        if (pos != text.size() || n <= -impl_->p || n >= impl_->p)
            throw std::invalid_argument("bad field element '" + text + "' for p = " + std::to_string(impl_->p));
        return from_int(n);
    }
    if (s.size() > static_cast<std::size_t>(impl_->k))
        throw std::invalid_argument("field element '" + text + "' has more than " + std::to_string(impl_->k) + " digits");
    std::uint32_t v = 0;
    for (char c : s) {
        const int d = digit_value(c);
        if (d < 0 || d >= impl_->p) throw std::invalid_argument("bad digit in field element '" + text + "'");
        v = v * static_cast<std::uint32_t>(impl_->p) + static_cast<std::uint32_t>(d);
    }
    return Elem{v};
}

bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k);
}

void require_same_field(const FiniteField& a, const FiniteField& b) {
    if (!(a == b)) throw std::invalid_argument("field mismatch");
}

}  // namespace ramcount
