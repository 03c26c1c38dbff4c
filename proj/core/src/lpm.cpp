#include "matroid/lpm.hpp"

#include <algorithm>

namespace matroid {

namespace {

// 1-based step positions of the north steps.
std::vector<int> north_positions(const LatticePath& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.steps.size(); ++i)
    if (p.steps[i] == 'N') out.push_back(static_cast<int>(i) + 1);
  return out;
}

int norths_before(const LatticePath& p, int steps) {
  int c = 0;
  for (int i = 0; i < steps; ++i) c += p.steps[i] == 'N';
  return c;
}

}  // namespace

void check_diagram(const Diagram& d) {
  if (d.upper.steps.empty() || d.lower.steps.empty()) throw Error("diagram: empty path");
  if (d.upper.steps.size() != d.lower.steps.size()) throw Error("diagram: path lengths differ");
  if (d.upper.steps.size() > kMaxGroundSet)
    throw Error("diagram: path longer than " + std::to_string(kMaxGroundSet));
  for (char c : d.upper.steps + d.lower.steps)
    if (c != 'N' && c != 'E') throw Error("diagram: step letters must be N or E");
  const int len = static_cast<int>(d.upper.steps.size());
  int nq = 0, np = 0;
  for (int k = 1; k <= len; ++k) {
    nq += d.upper.steps[k - 1] == 'N';
    np += d.lower.steps[k - 1] == 'N';
    if (np > nq) throw Error("diagram: lower path rises above upper path at step " + std::to_string(k));
  }
  if (nq != np) throw Error("diagram: paths end at different points");
}

Diagram make_diagram(const std::string& upper, const std::string& lower) {
  Diagram d{LatticePath{lower}, LatticePath{upper}};
  check_diagram(d);
  return d;
}

int diagram_size(const Diagram& d) { return static_cast<int>(d.upper.steps.size()) - 1; }

int diagram_rank(const Diagram& d) { return norths_before(d.upper, static_cast<int>(d.upper.steps.size())); }

bool is_connected(const Diagram& d) {
  check_diagram(d);
  const int len = static_cast<int>(d.upper.steps.size());
  int nq = 0, np = 0;
  for (int k = 1; k < len; ++k) {
    nq += d.upper.steps[k - 1] == 'N';
    np += d.lower.steps[k - 1] == 'N';
    if (nq == np) return false;
  }
  return true;
}

std::vector<Diagram> split_components(const Diagram& d) {
  check_diagram(d);
  const int len = static_cast<int>(d.upper.steps.size());
  std::vector<Diagram> out;
  int nq = 0, np = 0, from = 0;
  for (int k = 1; k <= len; ++k) {
    nq += d.upper.steps[k - 1] == 'N';
    np += d.lower.steps[k - 1] == 'N';
    if (nq == np) {
      out.push_back(Diagram{LatticePath{d.lower.steps.substr(from, k - from)},
                            LatticePath{d.upper.steps.substr(from, k - from)}});
      from = k;
    }
  }
  return out;
}

DiagramRows rows_of(const Diagram& d) {
  check_diagram(d);
  const std::vector<int> l = north_positions(d.upper);
  const std::vector<int> u = north_positions(d.lower);
  DiagramRows rows;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const int qx = l[i] - static_cast<int>(i) - 1;
    const int px = u[i] - static_cast<int>(i) - 1;
    if (px <= qx) throw Error("rows_of: row " + std::to_string(i + 1) + " is empty");
    rows.rows.emplace_back(qx + 1, px);
  }
  if (rows.rows.empty()) throw Error("rows_of: diagram has no rows");
  return rows;
}

Diagram diagram_from_rows(const DiagramRows& rows) {
  const int r = static_cast<int>(rows.rows.size());
  if (r == 0) throw Error("diagram_from_rows: no rows");
  int cols = 0;
  for (int i = 0; i < r; ++i) {
    auto [s, e] = rows.rows[i];
    if (s < 1 || e < s) throw Error("diagram_from_rows: bad row interval");
    if (i > 0 && (s < rows.rows[i - 1].first || e < rows.rows[i - 1].second))
      throw Error("diagram_from_rows: rows not staircase-ordered");
    cols = std::max(cols, e);
  }
  std::string upper, lower;
  int qx = 0, px = 0;
  for (int i = 0; i < r; ++i) {
    const int qs = rows.rows[i].first - 1;
    const int ps = rows.rows[i].second;
    upper += std::string(qs - qx, 'E') + "N";
    lower += std::string(ps - px, 'E') + "N";
    qx = qs;
    px = ps;
  }
  upper += std::string(cols - qx, 'E');
  lower += std::string(cols - px, 'E');
  return make_diagram(upper, lower);
}

SetSystem path_presentation(const Diagram& d) {
  check_diagram(d);
  const std::vector<int> l = north_positions(d.upper);
  const std::vector<int> u = north_positions(d.lower);
  SetSystem a;
  a.n = static_cast<int>(d.upper.steps.size());
  for (std::size_t i = 0; i < l.size(); ++i) a.sets.push_back(Subset::interval(l[i], u[i]));
  return a;
}

CyclicFlatMatroid lpm_matroid(const Diagram& d, int budget) {
  return matroid_of(path_presentation(d), budget);
}

std::vector<CornerFlat> corner_flats(const Diagram& d) {
  if (!is_connected(d)) throw Error("corner_flats: diagram is not connected");
  const int n = static_cast<int>(d.upper.steps.size());
  std::vector<CornerFlat> out;
  for (int a = 1; a < n; ++a) {
    if (d.upper.steps[a - 1] == 'E' && d.upper.steps[a] == 'N') {
      const int y = norths_before(d.upper, a);
      out.push_back(CornerFlat{CornerKind::Initial, Subset::interval(1, a), a, a - y, y});
    }
  }
  for (int b = 2; b <= n; ++b) {
    if (d.lower.steps[b - 2] == 'N' && d.lower.steps[b - 1] == 'E') {
      const int y = norths_before(d.lower, b - 1);
      out.push_back(CornerFlat{CornerKind::Final, Subset::interval(b, n), b, b - 1 - y, y});
    }
  }
  return out;
}

std::vector<std::pair<CornerFlat, CornerFlat>> mixed_pairs(const Diagram& d) {
  std::vector<std::pair<CornerFlat, CornerFlat>> out;
  const std::vector<CornerFlat> corners = corner_flats(d);
  for (const CornerFlat& a : corners) {
    if (a.kind != CornerKind::Initial) continue;
    for (const CornerFlat& b : corners) {
      if (b.kind != CornerKind::Final) continue;
      if (a.x < b.x && a.y > b.y) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_modular_corner_pair(const Diagram& d, const CornerFlat& initial, const CornerFlat& final_flat) {
  if (initial.kind != CornerKind::Initial || final_flat.kind != CornerKind::Final)
    throw Error("is_modular_corner_pair: expects an (initial, final) pair");
  const SetSystem pres = path_presentation(d);
  int both = 0;
  for (const Subset& ni : pres.sets)
    if (ni.intersects(initial.interval) && ni.intersects(final_flat.interval)) ++both;
  return both <= (initial.interval & final_flat.interval).size();
}

bool is_fundamental(const Diagram& d) {
  for (const Diagram& comp : split_components(d))
    if (diagram_size(comp) >= 1 && !mixed_pairs(comp).empty()) return false;
  return true;
}

SetSystem rook_presentation(const Diagram& d) {
  check_diagram(d);
  const std::vector<int> l = north_positions(d.upper);
  const std::vector<int> u = north_positions(d.lower);
  const int n = static_cast<int>(d.upper.steps.size());
  const int r = static_cast<int>(l.size());
  SetSystem a;
  a.n = n;
  for (int i = 1; i <= r; ++i) {
    Subset row = Subset::single(i);
    const int qx = l[i - 1] - i;
    const int px = u[i - 1] - i;
    for (int j = qx + 1; j <= px; ++j) row.add(r + j);
    a.sets.push_back(row);
  }
  return a;
}

int interval_rank(const Diagram& d, int a, int b) {
  check_diagram(d);
  const int n = static_cast<int>(d.upper.steps.size());
  if (a < 1 || b > n || a > b) throw Error("interval_rank: bad interval");
  const Subset x = Subset::interval(a, b);
  int t = 0;
  for (const Subset& ni : path_presentation(d).sets) t += ni.intersects(x);
  return std::min(t, b - a + 1);
}

Diagram transform(const Diagram& d, DiagramTransform t) {
  check_diagram(d);
  auto swap_ne = [](const std::string& s) {
    std::string out = s;
    for (char& c : out) c = (c == 'N') ? 'E' : 'N';
    return out;
  };
  if (t == DiagramTransform::DualFlip)
    return make_diagram(swap_ne(d.lower.steps), swap_ne(d.upper.steps));
  std::string upper = d.lower.steps, lower = d.upper.steps;
  std::reverse(upper.begin(), upper.end());
  std::reverse(lower.begin(), lower.end());
  return make_diagram(upper, lower);
}

std::optional<Diagram> restrict_to_interval(const Diagram& d, int a, int b) {
  check_diagram(d);
  const int n = static_cast<int>(d.upper.steps.size());
  if (a < 1 || b > n || a > b) throw Error("restrict_to_interval: bad interval");
  const std::vector<int> l = north_positions(d.upper);
  const std::vector<int> u = north_positions(d.lower);
  const int r = static_cast<int>(l.size());

  // Lowest north step usable as step a, highest usable as step b.
  int ia = 0, ib = 0;
  for (int i = 1; i <= r; ++i) {
    if (l[i - 1] <= a && a <= u[i - 1] && ia == 0) ia = i;
    if (l[i - 1] <= b && b <= u[i - 1]) ib = i;
  }
  if (ia == 0) throw Error("restrict_to_interval: " + std::to_string(a) + " is a loop");
  if (ib == 0) throw Error("restrict_to_interval: " + std::to_string(b) + " is a loop");

  const int xa = a - ia, xb = b - ib;
  if (xa >= xb) return std::nullopt;  // the restriction is free

  std::string upper, lower;
  int qprev = 0, pprev = 0;
  for (int i = ia; i <= ib; ++i) {
    const int qx = std::max(l[i - 1] - i, xa) - xa;
    const int px = std::min(u[i - 1] - i, xb) - xa;
    upper += std::string(qx - qprev, 'E') + "N";
    lower += std::string(px - pprev, 'E') + "N";
    qprev = qx;
    pprev = px;
  }
  const int cols = xb - xa;
  upper += std::string(cols - qprev, 'E');
  lower += std::string(cols - pprev, 'E');
  return make_diagram(upper, lower);
}

}  // namespace matroid
