#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace matroid {

// Ground sets are [n] = {1, ..., n} with n <= 64, a documented hard limit;
// element e occupies bit (e - 1) of a machine word.
inline constexpr int kMaxGroundSet = 64;

// Domain errors (bad input, exceeded enumeration budgets).  Internal
// invariant breakage throws std::logic_error instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t mask) : bits_(mask) {}

  static Subset of(std::initializer_list<int> elements) {
    Subset s;
    for (int e : elements) s.add(e);
    return s;
  }

  static Subset from_elements(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s.add(e);
    return s;
  }

  // The interval [a, b]; empty when a > b.
  static constexpr Subset interval(int a, int b) {
    if (a > b) return Subset{};
    return Subset{(bit(b) | (bit(b) - 1)) & ~(bit(a) - 1)};
  }

  static constexpr Subset full(int n) { return interval(1, n); }

  static Subset single(int e) { return Subset{bit(e)}; }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool contains(int e) const { return e >= 1 && e <= kMaxGroundSet && (bits_ & bit(e)); }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  void add(int e) {
    check_element(e);
    bits_ |= bit(e);
  }

  void remove(int e) {
    check_element(e);
    bits_ &= ~bit(e);
  }

  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(Subset o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }

  Subset complement_in(int n) const { return Subset{full(n).bits_ & ~bits_}; }

  // Smallest element, or 0 when empty.
  int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits_ | b.bits_}; }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits_ & b.bits_}; }
  // Set difference a - b.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }

  // Order on ascending element lists, lexicographic with the prefix rule;
  // used for deterministic witnesses and canonical flat order.
  static bool lex_less(Subset a, Subset b) {
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    std::uint64_t low = diff & (~diff + 1);  // lowest differing element
    std::uint64_t above = ~(low | (low - 1));
    if (a.bits_ & low) return (b.bits_ & above) != 0;  // a lists a smaller element next
    return (a.bits_ & above) == 0;                     // a is a proper prefix of b
  }

  // (size, lex) order; the toolkit-wide canonical order on flats.
  static bool canonical_less(Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  }

 private:
  static constexpr std::uint64_t bit(int e) { return std::uint64_t{1} << (e - 1); }

  static void check_element(int e) {
    if (e < 1 || e > kMaxGroundSet)
      throw Error("element " + std::to_string(e) + " outside [1," + std::to_string(kMaxGroundSet) + "]");
  }

  std::uint64_t bits_ = 0;
};

}  // namespace matroid
