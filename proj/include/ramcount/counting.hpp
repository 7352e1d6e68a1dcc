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

#ifndef RAMCOUNT_COUNTING_HPP
#define RAMCOUNT_COUNTING_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ramcount {

/// A prime characteristic or the characteristic-zero sentinel.
class Characteristic {
  public:
    static Characteristic infinite() noexcept { return Characteristic(0); }
    /// Throws std::invalid_argument unless p is an odd prime.
    static Characteristic prime(int p);

    bool is_infinite() const noexcept { return p_ == 0; }
    /// Throws std::logic_error for the sentinel.
    int value() const;
    /// p > n, with the sentinel above every integer.
    bool exceeds(int n) const noexcept { return p_ == 0 || p_ > n; }
    std::string to_string() const;

    friend bool operator==(Characteristic, Characteristic) = default;

  private:
    explicit Characteristic(int p) noexcept : p_(p) {}
    int p_;
};

/// Parses an odd prime or "inf".
Characteristic parse_characteristic(const std::string& text);

enum class CharClass { High, Mid, Low };
const char* to_string(CharClass c) noexcept;

struct RamProfile {
    Characteristic p = Characteristic::infinite();
    std::vector<int> orders;
    int d = 0;
    CharClass char_class = CharClass::High;
    /// Some e_i divisible by p.
    bool wild = false;
    /// Some e_i exceeds d.
    bool oversize = false;
};

/// Throws std::invalid_argument for fewer than three orders, an order below 1,
/// or odd total ramification.
RamProfile validate_profile(std::vector<int> orders, Characteristic p);

struct CountStep {
    int dprime;
    int e;
    std::uint64_t value;
};

struct CountResult {
    RamProfile profile;
    /// nullopt means unknown (low characteristic).
    std::optional<std::uint64_t> value;
    /// Top-level terms of the recursion.
    std::vector<CountStep> trace;
    /// Why the count was forced to 0 or left unknown; empty otherwise.
    std::string reason;
};

/// Memo table keyed on sorted orders and p; safe for concurrent use.
class CountMemo {
  public:
    std::optional<std::uint64_t> find(const std::string& key) const;
    void insert(const std::string& key, std::uint64_t value);
    std::size_t size() const;
    void clear();

  private:
    mutable std::mutex mu_;
    std::map<std::string, std::uint64_t> table_;
};

CountMemo& shared_count_memo();

/// 1 iff p > d for a valid three-point profile; invalid input gives 0 and a
/// reason.
int n_three(int e1, int e2, int e3, Characteristic p, std::string* reason = nullptr);

/// Number of separable maps for general points. memo may be null.
CountResult n_gen_recursive(const RamProfile& profile, CountMemo* memo = &shared_count_memo());
CountResult count(std::vector<int> orders, Characteristic p, CountMemo* memo = &shared_count_memo());

/// max(0, min_i{e_i, d+1-e_i} - max(0, d+1-p)) for four orders; nullopt when
/// some e_i >= p.
std::optional<std::uint64_t> n_four_closed(std::span<const int> orders, Characteristic p);

/// Replaces e_i, e_j by p - e_i, p - e_j (0-based indices).
RamProfile involution_reduce(const RamProfile& profile, std::size_t i, std::size_t j);

}  // namespace ramcount

#endif
