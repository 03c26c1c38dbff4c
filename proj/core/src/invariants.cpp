#include "matroid/invariants.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "matroid/lattice.hpp"

namespace matroid {

namespace {

constexpr int kFlagCountCap = 18;
constexpr int kPermutationScanCap = 9;

std::vector<std::vector<BigInt>> binomial_table(int n) {
  std::vector<std::vector<BigInt>> c(n + 1, std::vector<BigInt>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
  }
  return c;
}

}  // namespace

BigInt TuttePolynomial::coefficient(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
  if (j < 0 || j >= static_cast<int>(coeffs[i].size())) return 0;
  return coeffs[i][j];
}

BigInt TuttePolynomial::evaluate(long long x, long long y) const {
  BigInt out = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    BigInt xp = 1;
    for (std::size_t p = 0; p < i; ++p) xp *= x;
    for (std::size_t j = 0; j < coeffs[i].size(); ++j) {
      BigInt yp = 1;
      for (std::size_t q = 0; q < j; ++q) yp *= y;
      out += coeffs[i][j] * xp * yp;
    }
  }
  return out;
}

bool TuttePolynomial::operator==(const TuttePolynomial& o) const {
  const std::size_t rows = std::max(coeffs.size(), o.coeffs.size());
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t cols = 0;
    if (i < coeffs.size()) cols = std::max(cols, coeffs[i].size());
    if (i < o.coeffs.size()) cols = std::max(cols, o.coeffs[i].size());
    for (std::size_t j = 0; j < cols; ++j)
      if (coefficient(static_cast<int>(i), static_cast<int>(j)) !=
          o.coefficient(static_cast<int>(i), static_cast<int>(j)))
        return false;
  }
  return true;
}

TuttePolynomial tutte(const CyclicFlatMatroid& m, int budget) {
  const int n = m.ground_size();
  const std::vector<std::uint8_t> table = rank_table(m, budget);
  const int rm = table[(std::size_t{1} << n) - 1];

  // N[a][b] = #{A : corank a, nullity b}.
  std::vector<std::vector<BigInt>> hist(rm + 1, std::vector<BigInt>(n - rm + 1, 0));
  for (std::size_t x = 0; x < table.size(); ++x)
    hist[rm - table[x]][std::popcount(x) - table[x]] += 1;

  const auto binom = binomial_table(n + 1);
  TuttePolynomial t;
  t.coeffs.assign(rm + 1, std::vector<BigInt>(n - rm + 1, 0));
  for (int i = 0; i <= rm; ++i) {
    for (int j = 0; j <= n - rm; ++j) {
      BigInt c = 0;
      for (int a = i; a <= rm; ++a)
        for (int b = j; b <= n - rm; ++b) {
          const BigInt term = hist[a][b] * binom[a][i] * binom[b][j];
          c += ((a - i + b - j) % 2 == 0) ? term : -term;
        }
      if (c < 0) throw std::logic_error("tutte: negative coefficient");
      t.coeffs[i][j] = c;
    }
  }
  return t;
}

namespace {

GInvariant g_by_flags(const CyclicFlatMatroid& m) {
  if (m.ground_size() > kFlagCountCap)
    throw Error("g_invariant: FlagCount budget exceeded (n > " + std::to_string(kFlagCountCap) + ")");
  const auto levels = flats_by_rank(m);
  const int rm = static_cast<int>(levels.size()) - 1;

  // suffix[F] maps the tail composition (d_{k+1}, ..., d_r) to its flag count.
  using Suffix = std::map<std::vector<int>, BigInt>;
  std::unordered_map<std::uint64_t, Suffix> above;
  above[levels[rm][0]] = {{{}, 1}};
  for (int k = rm - 1; k >= 0; --k) {
    std::unordered_map<std::uint64_t, Suffix> current;
    for (std::uint64_t fm : levels[k]) {
      Suffix& mine = current[fm];
      for (std::uint64_t gm : levels[k + 1]) {
        if ((fm & ~gm) != 0) continue;  // F not contained in G
        const int d = std::popcount(gm & ~fm);
        for (const auto& [key, cnt] : above[gm]) {
          std::vector<int> longer;
          longer.reserve(key.size() + 1);
          longer.push_back(d);
          longer.insert(longer.end(), key.begin(), key.end());
          mine[longer] += cnt;
        }
      }
    }
    above = std::move(current);
  }

  GInvariant g;
  g.method = GMethod::FlagCount;
  const std::uint64_t bottom = levels[0][0];
  for (const auto& [key, cnt] : above[bottom]) {
    std::vector<int> full;
    full.reserve(key.size() + 1);
    full.push_back(std::popcount(bottom));
    full.insert(full.end(), key.begin(), key.end());
    g.table[full] = cnt;
  }
  return g;
}

GInvariant g_by_permutations(const CyclicFlatMatroid& m) {
  const int n = m.ground_size();
  if (n > kPermutationScanCap)
    throw Error("g_invariant: PermutationScan budget exceeded (n > " +
                std::to_string(kPermutationScanCap) + ")");
  GInvariant g;
  g.method = GMethod::PermutationScan;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  do {
    std::vector<int> comp{0};
    Subset prefix;
    int prev = 0;
    for (int e : perm) {
      prefix.add(e);
      const int r = rank(m, prefix);
      if (r > prev)
        comp.push_back(1);
      else
        comp.back() += 1;
      prev = r;
    }
    g.table[comp] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g;
}

}  // namespace

GInvariant g_invariant(const CyclicFlatMatroid& m, GMethod method) {
  return method == GMethod::FlagCount ? g_by_flags(m) : g_by_permutations(m);
}

std::string Configuration::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

Configuration Configuration::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw Error("configuration: odd hex length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw Error("configuration: bad hex digit");
  };
  Configuration c;
  c.bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    c.bytes.push_back(static_cast<std::uint8_t>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  return c;
}

namespace {

// Inclusion covers of the cyclic-flat family, as upper-cover lists.
std::vector<std::vector<int>> flat_covers(const std::vector<RankedSet>& fl) {
  const int k = static_cast<int>(fl.size());
  std::vector<std::vector<int>> up(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j || !fl[i].set.proper_subset_of(fl[j].set)) continue;
      bool cover = true;
      for (int u = 0; u < k && cover; ++u)
        if (u != i && u != j && fl[i].set.proper_subset_of(fl[u].set) &&
            fl[u].set.proper_subset_of(fl[j].set))
          cover = false;
      if (cover) up[i].push_back(j);
    }
  }
  return up;
}

struct DecodedConfiguration {
  int n = 0;
  int k = 0;
  std::vector<std::array<int, 2>> labels;      // (size, rank)
  std::vector<std::vector<int>> upper_covers;  // by canonical position
};

DecodedConfiguration decode(const Configuration& c) {
  const std::vector<std::uint8_t>& b = c.bytes;
  std::size_t pos = 0;
  auto u8 = [&]() -> int {
    if (pos >= b.size()) throw Error("configuration: truncated encoding");
    return b[pos++];
  };
  auto u16 = [&]() -> int {
    const int hi = u8();
    return (hi << 8) | u8();
  };
  DecodedConfiguration d;
  d.n = u8();
  d.k = u16();
  d.labels.resize(d.k);
  for (int i = 0; i < d.k; ++i) {
    d.labels[i][0] = u8();
    d.labels[i][1] = u8();
  }
  d.upper_covers.resize(d.k);
  for (int i = 0; i < d.k; ++i) {
    const int deg = u16();
    d.upper_covers[i].resize(deg);
    for (int j = 0; j < deg; ++j) {
      d.upper_covers[i][j] = u16();
      if (d.upper_covers[i][j] < 0 || d.upper_covers[i][j] >= d.k)
        throw Error("configuration: cover index out of range");
    }
  }
  if (pos != b.size()) throw Error("configuration: trailing bytes");
  return d;
}

}  // namespace

Configuration configuration(const CyclicFlatMatroid& m) {
  const std::vector<RankedSet>& fl = m.cyclic_flats();
  std::vector<std::array<int, 2>> labels(fl.size());
  for (std::size_t i = 0; i < fl.size(); ++i) labels[i] = {fl[i].set.size(), fl[i].rank};
  Configuration c;
  c.bytes.push_back(static_cast<std::uint8_t>(m.ground_size()));
  const std::vector<std::uint8_t> poset =
      canonical_poset_bytes(static_cast<int>(fl.size()), flat_covers(fl), labels);
  c.bytes.insert(c.bytes.end(), poset.begin(), poset.end());
  return c;
}

bool same_configuration(const CyclicFlatMatroid& a, const CyclicFlatMatroid& b) {
  return configuration(a) == configuration(b);
}

Configuration configuration_dual(const Configuration& c) {
  const DecodedConfiguration d = decode(c);
  // r(M) = rank of the top flat plus its coloops outside it.
  int top = -1;
  for (int i = 0; i < d.k; ++i)
    if (d.upper_covers[i].empty()) {
      if (top >= 0) throw Error("configuration: two maximal nodes");
      top = i;
    }
  if (top < 0) throw Error("configuration: no maximal node");
  const int rm = d.labels[top][1] + (d.n - d.labels[top][0]);

  std::vector<std::vector<int>> reversed(d.k);
  for (int i = 0; i < d.k; ++i)
    for (int j : d.upper_covers[i]) reversed[j].push_back(i);
  std::vector<std::array<int, 2>> labels(d.k);
  for (int i = 0; i < d.k; ++i) {
    const int s = d.n - d.labels[i][0];
    labels[i] = {s, s - rm + d.labels[i][1]};
    if (labels[i][1] < 0 || labels[i][1] > s) throw Error("configuration: malformed label data");
  }
  Configuration out;
  out.bytes.push_back(static_cast<std::uint8_t>(d.n));
  const std::vector<std::uint8_t> poset = canonical_poset_bytes(d.k, reversed, labels);
  out.bytes.insert(out.bytes.end(), poset.begin(), poset.end());
  return out;
}

namespace {

struct IsoSearch {
  const std::vector<RankedSet>& fm;
  const std::vector<RankedSet>& fn;
  int n;
  int k;
  std::vector<std::vector<bool>> leq_m, leq_n;
  std::vector<int> sigma;      // flat i of M -> flat sigma[i] of N
  std::vector<bool> used;

  // Element types: the set of flats containing the element.  A lattice map
  // sigma extends to a ground-set bijection iff every type cell has the same
  // size on both sides; the bijection then matches cells in ascending order.
  std::optional<std::vector<int>> element_bijection() const {
    std::map<std::vector<bool>, std::vector<int>> cells_n;
    for (int f = 1; f <= n; ++f) {
      std::vector<bool> type(k, false);
      for (int j = 0; j < k; ++j) type[j] = fn[j].set.contains(f);
      cells_n[type].push_back(f);
    }
    std::map<std::vector<bool>, std::vector<int>> cells_m;
    for (int e = 1; e <= n; ++e) {
      std::vector<bool> translated(k, false);
      for (int i = 0; i < k; ++i)
        if (fm[i].set.contains(e)) translated[sigma[i]] = true;
      cells_m[translated].push_back(e);
    }
    std::vector<int> phi(n, 0);
    for (const auto& [type, elems] : cells_m) {
      auto it = cells_n.find(type);
      if (it == cells_n.end() || it->second.size() != elems.size()) return std::nullopt;
      for (std::size_t p = 0; p < elems.size(); ++p) phi[elems[p] - 1] = it->second[p];
    }
    return phi;
  }

  std::optional<std::vector<int>> search(int i) {
    if (i == k) return element_bijection();
    for (int j = 0; j < k; ++j) {
      if (used[j]) continue;
      if (fm[i].set.size() != fn[j].set.size() || fm[i].rank != fn[j].rank) continue;
      bool ok = true;
      for (int p = 0; p < i && ok; ++p)
        ok = leq_m[p][i] == leq_n[sigma[p]][j] && leq_m[i][p] == leq_n[j][sigma[p]];
      if (!ok) continue;
      sigma[i] = j;
      used[j] = true;
      std::optional<std::vector<int>> phi = search(i + 1);
      used[j] = false;
      if (phi) return phi;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const CyclicFlatMatroid& m, const CyclicFlatMatroid& n) {
  if (m.ground_size() != n.ground_size()) return std::nullopt;
  if (m.cyclic_flats().size() != n.cyclic_flats().size()) return std::nullopt;
  const int k = static_cast<int>(m.cyclic_flats().size());
  IsoSearch s{m.cyclic_flats(), n.cyclic_flats(), m.ground_size(), k, {}, {}, {}, {}};
  s.leq_m.assign(k, std::vector<bool>(k, false));
  s.leq_n.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      s.leq_m[i][j] = s.fm[i].set.subset_of(s.fm[j].set);
      s.leq_n[i][j] = s.fn[i].set.subset_of(s.fn[j].set);
    }
  s.sigma.assign(k, -1);
  s.used.assign(k, false);
  return s.search(0);
}

std::string to_string(UniquenessCertificate c) {
  switch (c) {
    case UniquenessCertificate::IntersectionClosedModular: return "IntersectionClosedModular";
    case UniquenessCertificate::UnionClosedModular: return "UnionClosedModular";
    case UniquenessCertificate::NoCertificate: return "NoCertificate";
  }
  return "?";
}

UniquenessCertificate uniqueness_certificate(const CyclicFlatMatroid& m) {
  const std::vector<RankedSet>& fl = m.cyclic_flats();
  bool all_modular = true;
  bool meet_closed = true;
  bool join_closed = true;
  for (std::size_t i = 0; i < fl.size() && all_modular; ++i) {
    for (std::size_t j = i + 1; j < fl.size(); ++j) {
      if (!is_modular_pair(m, fl[i].set, fl[j].set)) {
        all_modular = false;
        break;
      }
      if (m.find_flat(fl[i].set & fl[j].set) < 0) meet_closed = false;
      if (m.find_flat(fl[i].set | fl[j].set) < 0) join_closed = false;
    }
  }
  if (all_modular && meet_closed) return UniquenessCertificate::IntersectionClosedModular;
  if (all_modular && join_closed) return UniquenessCertificate::UnionClosedModular;
  return UniquenessCertificate::NoCertificate;
}

}  // namespace matroid
