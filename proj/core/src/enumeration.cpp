#include "matroid/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace matroid {

namespace {

// All lower paths strictly below the given upper path except at the two
// endpoints; nq[k] = norths among the first k upper steps.  'E' < 'N', so
// the emission order is lexicographic.
void emit_lower_paths(const std::string& upper, const std::vector<int>& nq, std::string& lower,
                      int placed_n, int r, const std::function<void(const Diagram&)>& fn) {
  const int len = static_cast<int>(upper.size());
  const int at = static_cast<int>(lower.size());
  if (at == len) {
    fn(Diagram{LatticePath{lower}, LatticePath{upper}});
    return;
  }
  const int k = at + 1;
  for (char c : {'E', 'N'}) {
    const int placed = placed_n + (c == 'N');
    if (placed > r) continue;
    if (r - placed > len - k) continue;            // room for remaining norths
    if (k < len && placed >= nq[k]) continue;      // interior strictness
    lower.push_back(c);
    emit_lower_paths(upper, nq, lower, placed, r, fn);
    lower.pop_back();
  }
}

void emit_upper_paths(std::string& upper, int placed_n, int r, int len,
                      const std::function<void(const std::string&)>& fn) {
  const int at = static_cast<int>(upper.size());
  if (at == len) {
    fn(upper);
    return;
  }
  // Strict separation forces the upper path to start with N and end with E.
  if (at > 0 && len - at > r - placed_n) {
    upper.push_back('E');
    emit_upper_paths(upper, placed_n, r, len, fn);
    upper.pop_back();
  }
  if (placed_n < r && at + 1 < len) {
    upper.push_back('N');
    emit_upper_paths(upper, placed_n + 1, r, len, fn);
    upper.pop_back();
  }
}

}  // namespace

void for_each_diagram_of_size(int m, const std::function<void(const Diagram&)>& fn) {
  if (m < 1 || m > kDiagramSizeCap)
    throw Error("diagrams_of_size: size " + std::to_string(m) + " outside [1," +
                std::to_string(kDiagramSizeCap) + "]");
  const int len = m + 1;
  for (int r = 1; r <= m; ++r) {
    std::string upper;
    emit_upper_paths(upper, 0, r, len, [&](const std::string& q) {
      std::vector<int> nq(len + 1, 0);
      for (int k = 1; k <= len; ++k) nq[k] = nq[k - 1] + (q[k - 1] == 'N');
      std::string lower;
      emit_lower_paths(q, nq, lower, 0, r, fn);
    });
  }
}

std::vector<Diagram> diagrams_of_size(int m) {
  std::vector<Diagram> out;
  for_each_diagram_of_size(m, [&](const Diagram& d) { out.push_back(d); });
  return out;
}

Diagram word_to_diagram(const Word& w) {
  DiagramRows rows;
  rows.rows = {{1, 1}};
  for (char c : w.letters) {
    const int top = static_cast<int>(rows.rows.size()) - 1;
    const int cmax = rows.rows[top].second;
    switch (c) {
      case 'R':
        rows.rows.push_back(rows.rows[top]);
        break;
      case 'C':
        for (auto& [s, e] : rows.rows)
          if (e == cmax) ++e;
        break;
      case 'S':
        ++rows.rows[top].second;
        break;
      case 'T':
        rows.rows.push_back({cmax, cmax});
        break;
      default:
        throw Error(std::string("word_to_diagram: bad letter '") + c + "'");
    }
  }
  return diagram_from_rows(rows);
}

Word canonical_word(const Diagram& d) {
  if (!is_connected(d)) throw Error("canonical_word: diagram is not connected");
  if (!mixed_pairs(d).empty()) throw Error("canonical_word: diagram is mixed, no build word exists");

  // Corner events pin S/T letters and the row/column counts around them:
  // a lower corner at (x, y) is S at position x + y reached in state
  // (rows, cols) = (y + 1, x); an upper corner at (x, y) is T at position
  // x + y in state (y, x + 1).
  struct Event {
    int pos;
    char letter;
    int rows_before, cols_before;
  };
  std::vector<Event> events;
  for (const CornerFlat& c : corner_flats(d)) {
    if (c.kind == CornerKind::Final)
      events.push_back({c.x + c.y, 'S', c.y + 1, c.x});
    else
      events.push_back({c.x + c.y, 'T', c.y, c.x + 1});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.pos < b.pos; });
  for (std::size_t i = 1; i < events.size(); ++i)
    if (events[i].pos == events[i - 1].pos)
      throw std::logic_error("canonical_word: two corners on one antidiagonal in a non-mixed diagram");

  const int total_rows = diagram_rank(d);
  const int total_cols = static_cast<int>(d.upper.steps.size()) - total_rows;
  std::string word;
  int rows = 1, cols = 1;
  auto advance = [&](int rows_to, int cols_to) {
    if (cols_to < cols || rows_to < rows)
      throw std::logic_error("canonical_word: corner states decrease");
    word += std::string(cols_to - cols, 'C');
    word += std::string(rows_to - rows, 'R');
    rows = rows_to;
    cols = cols_to;
  };
  for (const Event& ev : events) {
    advance(ev.rows_before, ev.cols_before);
    if (static_cast<int>(word.size()) + 1 != ev.pos)
      throw std::logic_error("canonical_word: corner position out of step");
    word.push_back(ev.letter);
    if (ev.letter == 'S')
      cols += 1;
    else
      rows += 1;
  }
  advance(total_rows, total_cols);
  if (static_cast<int>(word.size()) != diagram_size(d) - 1)
    throw std::logic_error("canonical_word: word length mismatch");
  return Word{word};
}

namespace {

// Column j occupies rows [lo, hi] of a staircase row list.
std::pair<int, int> column_extent(const DiagramRows& rows, int j) {
  int lo = 0, hi = -1;
  for (int i = 0; i < static_cast<int>(rows.rows.size()); ++i) {
    if (rows.rows[i].first <= j && j <= rows.rows[i].second) {
      if (lo == 0) lo = i + 1;
      hi = i + 1;
    }
  }
  return {lo, hi};
}

}  // namespace

bool is_thick(const Diagram& d) {
  if (!is_connected(d)) throw Error("is_thick: diagram is not connected");
  if (!mixed_pairs(d).empty()) throw Error("is_thick: diagram is mixed");
  if (diagram_size(d) < 3) return false;
  const DiagramRows rows = rows_of(d);
  int cols = 0;
  for (auto [s, e] : rows.rows) {
    if (e - s + 1 < 2) return false;
    cols = std::max(cols, e);
  }
  for (int j = 1; j <= cols; ++j) {
    auto [lo, hi] = column_extent(rows, j);
    if (hi - lo + 1 < 2) return false;
  }
  return true;
}

ThickDecomposition thick_decompose(const Diagram& d) {
  if (!is_connected(d)) throw Error("thick_decompose: diagram is not connected");
  if (!mixed_pairs(d).empty()) throw Error("thick_decompose: diagram is mixed");
  const DiagramRows rows = rows_of(d);
  const int r = static_cast<int>(rows.rows.size());
  int cols = 0;
  for (auto [s, e] : rows.rows) cols = std::max(cols, e);

  // key = x + y of the left/bottom end of the cut edge.
  struct Cut {
    int key;
    bool between_cols;  // otherwise between rows
    int at;             // column j or row i the cut follows
    int shared;         // the single shared row / column
  };
  std::vector<Cut> cuts;
  for (int i = 1; i < r; ++i) {
    if (rows.rows[i].first == rows.rows[i - 1].second)
      cuts.push_back({rows.rows[i].first - 1 + i, false, i, rows.rows[i].first});
  }
  for (int j = 1; j < cols; ++j) {
    auto [lo1, hi1] = column_extent(rows, j);
    auto [lo2, hi2] = column_extent(rows, j + 1);
    (void)lo1;
    (void)hi2;
    if (lo2 == hi1) cuts.push_back({j + lo2 - 1, true, j, lo2});
  }
  std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) { return a.key < b.key; });

  ThickDecomposition out;
  int row_lo = 1, col_lo = 1;
  auto emit = [&](int row_hi, int col_hi) {
    DiagramRows piece;
    for (int i = row_lo; i <= row_hi; ++i) {
      const int s = std::max(rows.rows[i - 1].first, col_lo);
      const int e = std::min(rows.rows[i - 1].second, col_hi);
      if (s > e) throw std::logic_error("thick_decompose: empty row in a piece");
      piece.rows.emplace_back(s - col_lo + 1, e - col_lo + 1);
    }
    out.pieces.push_back(diagram_from_rows(piece));
  };
  for (const Cut& c : cuts) {
    if (c.between_cols) {
      emit(c.shared, c.at);
      row_lo = c.shared;
      col_lo = c.at + 1;
      out.glues.push_back(Glue::North);
    } else {
      emit(c.at, c.shared);
      row_lo = c.at + 1;
      col_lo = c.shared;
      out.glues.push_back(Glue::East);
    }
  }
  emit(r, cols);
  return out;
}

Diagram glue_diagrams(const Diagram& a, const Diagram& b, Glue glue) {
  const DiagramRows ra = rows_of(a);
  const DiagramRows rb = rows_of(b);
  const int r1 = static_cast<int>(ra.rows.size());
  int c1 = 0;
  for (auto [s, e] : ra.rows) c1 = std::max(c1, e);
  DiagramRows merged = ra;
  if (glue == Glue::North) {
    if (ra.rows[r1 - 1].second != c1 || rb.rows[0].first != 1)
      throw Error("glue_diagrams: paths do not share a north step");
    merged.rows[r1 - 1].second = c1 + rb.rows[0].second;
    for (std::size_t i = 1; i < rb.rows.size(); ++i)
      merged.rows.emplace_back(rb.rows[i].first + c1, rb.rows[i].second + c1);
  } else {
    for (const auto& [s, e] : rb.rows) merged.rows.emplace_back(s + c1 - 1, e + c1 - 1);
  }
  return diagram_from_rows(merged);
}

namespace {

long long checked_mul3(long long v) {
  if (v > (1LL << 61)) throw Error("count_formula: overflow");
  return 3 * v;
}

std::vector<std::vector<long long>> oc_polynomials(int m_max) {
  // OC(z,y) = zy(1 - z(1+y)) / (1 - 2(1+y)z + (1+y+y^2)z^2); the z^m
  // coefficients satisfy the linear recurrence read off the denominator.
  std::vector<std::vector<long long>> oc(m_max + 1);
  for (int m = 1; m <= m_max; ++m) {
    std::vector<long long> p(m + 1, 0);
    auto add_shifted = [&](const std::vector<long long>& q, int shift, long long factor) {
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (static_cast<int>(i) + shift <= m) p[i + shift] += factor * q[i];
      }
    };
    if (m >= 1) {
      add_shifted(oc[m - 1], 0, 2);
      add_shifted(oc[m - 1], 1, 2);
    }
    if (m >= 2) {
      add_shifted(oc[m - 2], 0, -1);
      add_shifted(oc[m - 2], 1, -1);
      add_shifted(oc[m - 2], 2, -1);
    }
    if (m == 1) p[1] += 1;
    if (m == 2) {
      p[1] -= 1;
      p[2] -= 1;
    }
    oc[m] = std::move(p);
  }
  return oc;
}

}  // namespace

long long count_formula(CountKind kind, int p1, int p2) {
  switch (kind) {
    case CountKind::Pell: {
      if (p1 < 0 || p1 > 45) throw Error("count_formula: Pell index out of range");
      long long a = 0, b = 1;
      for (int i = 0; i < p1; ++i) {
        const long long c = 2 * b + a;
        a = b;
        b = c;
      }
      return a;
    }
    case CountKind::Delannoy: {
      if (p1 < 0 || p2 < 0 || p1 > 30 || p2 > 30) throw Error("count_formula: Delannoy out of range");
      std::vector<std::vector<long long>> d(p1 + 1, std::vector<long long>(p2 + 1, 1));
      for (int i = 1; i <= p1; ++i)
        for (int j = 1; j <= p2; ++j) d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
      return d[p1][p2];
    }
    case CountKind::NonMixedTotal: {
      if (p1 < 1 || p1 > 39) throw Error("count_formula: non-mixed size out of range");
      long long pw = 1;
      for (int i = 1; i < p1; ++i) pw = checked_mul3(pw);
      return (pw + 1) / 2;
    }
    case CountKind::ThickTotal:
      if (p1 < 1) throw Error("count_formula: thick size out of range");
      return p1 < 3 ? 0 : count_formula(CountKind::Pell, p1 - 2);
    case CountKind::OrderConsecutive: {
      if (p1 < 1 || p1 > 30 || p2 < 0) throw Error("count_formula: order-consecutive out of range");
      const auto oc = oc_polynomials(p1);
      if (p2 >= static_cast<int>(oc[p1].size())) return 0;
      return oc[p1][p2];
    }
    case CountKind::Catalan: {
      if (p1 < 0 || p1 > 30) throw Error("count_formula: Catalan index out of range");
      long long c = 1;
      for (int i = 0; i < p1; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
      return c;
    }
  }
  throw Error("count_formula: unknown kind");
}

std::string CountTable::to_tsv() const {
  std::string out = "m\tr\tclass\tbrute\tclosed\n";
  for (const CountRow& row : rows) {
    out += std::to_string(row.m);
    out += '\t';
    out += row.r < 0 ? std::string("-") : std::to_string(row.r);
    out += '\t' + row.klass + '\t' + std::to_string(row.brute) + '\t' + std::to_string(row.closed) +
           '\n';
  }
  return out;
}

CountTable census(int m_max, bool by_rank) {
  if (m_max < 1 || m_max > kCensusCap)
    throw Error("census: m_max outside [1," + std::to_string(kCensusCap) + "]");
  CountTable table;
  for (int m = 1; m <= m_max; ++m) {
    long long total = 0, nonmixed = 0, thick = 0;
    std::map<int, long long> nonmixed_r, thick_r;
    std::set<std::string> words;
    for_each_diagram_of_size(m, [&](const Diagram& d) {
      ++total;
      const int r = diagram_rank(d);
      if (!mixed_pairs(d).empty()) return;
      ++nonmixed;
      ++nonmixed_r[r];
      const Word w = canonical_word(d);
      if (word_to_diagram(w) != d)
        throw std::logic_error("census: canonical word does not round-trip");
      if (!words.insert(w.letters).second)
        throw std::logic_error("census: duplicate canonical word " + w.letters);
      if (is_thick(d)) {
        ++thick;
        ++thick_r[r];
      }
    });

    auto row = [&](int r, const std::string& klass, long long brute, long long closed) {
      if (brute != closed)
        throw std::logic_error("census: brute " + std::to_string(brute) + " != closed " +
                               std::to_string(closed) + " for " + klass + " at m = " +
                               std::to_string(m));
      table.rows.push_back(CountRow{m, r, klass, brute, closed});
    };
    row(-1, "all", total, count_formula(CountKind::Catalan, m));
    row(-1, "nonmixed", nonmixed, count_formula(CountKind::NonMixedTotal, m));
    row(-1, "thick", thick, count_formula(CountKind::ThickTotal, m));
    if (by_rank) {
      for (int r = 1; r <= m; ++r) {
        row(r, "nonmixed", nonmixed_r.count(r) ? nonmixed_r[r] : 0,
            count_formula(CountKind::OrderConsecutive, m, r));
        const long long closed_thick =
            (m > r && r > 1) ? count_formula(CountKind::Delannoy, m - r - 1, r - 2) : 0;
        row(r, "thick", thick_r.count(r) ? thick_r[r] : 0, closed_thick);
      }
    }
  }
  return table;
}

}  // namespace matroid
