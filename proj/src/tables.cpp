#include "glsuper/tables.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "glsuper/errors.hpp"

namespace glsuper {

namespace {

// Number of integer steps from lo up to hi, or -1 if hi - lo is not in Z_+.
long steps_between(const Rational& lo, const Rational& hi) {
  Rational d = hi - lo;
  if (!is_nonneg_integer(d)) return -1;
  return d.get_num().get_si();
}

std::string join(const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ",";
    out += row[i].get_str();
  }
  return out;
}

void require_diff(const Row& labels, std::size_t a, std::size_t b, bool strict, const std::string& what) {
  Rational d = labels[a] - labels[b];
  if (!is_nonneg_integer(d) || (strict && d == 0)) {
    throw Error(ErrorCode::MalformedSignature,
                what + ": " + labels[a].get_str() + " - " + labels[b].get_str() +
                    (strict ? " must be a positive integer" : " must be a nonnegative integer"));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Signatures

GzSignature GzSignature::finite(Row labels) {
  if (labels.empty()) throw Error(ErrorCode::MalformedSignature, "empty signature");
  for (std::size_t i = 1; i + 1 < labels.size(); ++i) require_diff(labels, i, i + 1, false, "m_" + std::to_string(i + 1));
  GzSignature sig;
  sig.labels_ = std::move(labels);
  return sig;
}

GzSignature GzSignature::infinite(Row head) {
  if (head.size() < 2) throw Error(ErrorCode::MalformedSignature, "infinite signature needs m_1 and m_2");
  for (std::size_t i = 1; i + 1 < head.size(); ++i) require_diff(head, i, i + 1, false, "m_" + std::to_string(i + 1));
  GzSignature sig;
  sig.infinite_ = true;
  sig.labels_ = std::move(head);
  return sig;
}

const Rational& GzSignature::label(int i) const {
  if (i < 1 || (!infinite_ && i > length())) {
    throw Error(ErrorCode::IndexOutOfRange, "signature label " + std::to_string(i));
  }
  return labels_[static_cast<std::size_t>(std::min(i, length()) - 1)];
}

Row GzSignature::prefix(int j) const {
  Row out;
  out.reserve(static_cast<std::size_t>(j));
  for (int i = 1; i <= j; ++i) out.push_back(label(i));
  return out;
}

CSignature CSignature::finite(const Row& window) {
  if (window.empty()) throw Error(ErrorCode::MalformedSignature, "empty signature");
  CSignature sig;
  sig.top_ = static_cast<int>(window.size());
  int lo = c_lo(sig.top_);
  int hi = c_hi(sig.top_);
  sig.m0_ = window[static_cast<std::size_t>(-lo)];
  for (int i = -1; i >= lo; --i) sig.neg_.push_back(window[static_cast<std::size_t>(i - lo)]);
  for (int i = 1; i <= hi; ++i) sig.pos_.push_back(window[static_cast<std::size_t>(i - lo)]);
  for (std::size_t i = 0; i + 1 < sig.neg_.size(); ++i) require_diff(sig.neg_, i + 1, i, false, "negative labels");
  for (std::size_t i = 0; i + 1 < sig.pos_.size(); ++i) require_diff(sig.pos_, i, i + 1, false, "positive labels");
  if (!sig.neg_.empty() && !sig.pos_.empty()) {
    Row pair{sig.neg_.front(), sig.pos_.front()};
    require_diff(pair, 0, 1, true, "M_-1 - M_1");
  }
  return sig;
}

CSignature CSignature::infinite(const Row& tail, const Row& neg) {
  if (tail.size() < 2) throw Error(ErrorCode::MalformedSignature, "infinite signature needs M_0 and M_1");
  if (neg.empty()) throw Error(ErrorCode::MalformedSignature, "infinite signature needs M_-1");
  CSignature sig;
  sig.infinite_ = true;
  sig.m0_ = tail.front();
  sig.pos_.assign(tail.begin() + 1, tail.end());
  sig.neg_ = neg;
  for (std::size_t i = 0; i + 1 < sig.neg_.size(); ++i) require_diff(sig.neg_, i + 1, i, false, "negative labels");
  for (std::size_t i = 0; i + 1 < sig.pos_.size(); ++i) require_diff(sig.pos_, i, i + 1, false, "positive labels");
  Row pair{sig.neg_.front(), sig.pos_.front()};
  require_diff(pair, 0, 1, true, "M_-1 - M_1");
  return sig;
}

const Rational& CSignature::label(int i) const {
  if (!infinite_ && (i < c_lo(top_) || i > c_hi(top_))) {
    throw Error(ErrorCode::IndexOutOfRange, "signature label " + std::to_string(i));
  }
  if (i == 0) return m0_;
  if (i > 0) return pos_[static_cast<std::size_t>(std::min<int>(i, static_cast<int>(pos_.size())) - 1)];
  return neg_[static_cast<std::size_t>(std::min<int>(-i, static_cast<int>(neg_.size())) - 1)];
}

Row CSignature::window(int r) const {
  Row out;
  for (int i = c_lo(r); i <= c_hi(r); ++i) out.push_back(label(i));
  return out;
}

bool gz_is_essentially_typical(const GzSignature& sig) {
  if (sig.length() < 2) return true;
  Rational l1 = sig.label(1) + 1;
  Rational l2 = -sig.label(2) + 1;
  Rational offset = l1 - l2;
  if (sig.is_infinite()) return !is_nonneg_integer(offset);
  int n1 = sig.length();
  Rational last = -sig.label(n1) + n1 - 1;
  return !(is_nonneg_integer(offset) && offset <= last - l2);
}

bool c_is_essentially_typical(const CSignature& sig) {
  if (sig.is_infinite()) return !is_integer(sig.m0() + sig.positive().front());
  int r = sig.top_row();
  if (r < 2) return true;
  int k = level_k(r);
  // L-values of the nonzero indices in the order the relabelled GZ row lists them.
  auto L = [&](int i) -> Rational { return i < 0 ? Rational(-sig.label(i) + i + 1) : Rational(-sig.label(i) + i - 1); };
  int last_index = c_hi(r) >= 1 ? c_hi(r) : -1;
  Rational first = L(-k);
  Rational last = L(last_index);
  Rational offset = sig.m0() - first;
  return !(is_nonneg_integer(offset) && offset <= last - first);
}

// ---------------------------------------------------------------------------
// Entries

const Rational& gz_entry(const GzSignature& sig, const GzTable& t, int i, int j) {
  if (i < 1 || i > j) throw Error(ErrorCode::IndexOutOfRange, "m_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  if (j <= static_cast<int>(t.rows.size())) return t.rows[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
  if (!sig.is_infinite()) throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(j));
  return sig.label(i);
}

Rational gz_l(const GzSignature& sig, const GzTable& t, int i, int j) {
  const Rational& m = gz_entry(sig, t, i, j);
  return i == 1 ? Rational(m + 1) : Rational(-m + i - 1);
}

Rational gz_theta(const GzSignature& sig, const GzTable& t, int i) {
  return gz_entry(sig, t, 1, i + 1) - gz_entry(sig, t, 1, i);
}

const Rational& c_entry(const CSignature& sig, const CTable& t, int i, int r) {
  if (i < c_lo(r) || i > c_hi(r)) {
    throw Error(ErrorCode::IndexOutOfRange, "M_{" + std::to_string(i) + "," + std::to_string(r) + "}");
  }
  if (r <= static_cast<int>(t.rows.size())) return t.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(i - c_lo(r))];
  if (!sig.is_infinite()) throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(r));
  return sig.label(i);
}

Rational c_L(const CSignature& sig, const CTable& t, int i, int r) {
  const Rational& m = c_entry(sig, t, i, r);
  if (i == 0) return m;
  return i < 0 ? Rational(-m + i + 1) : Rational(-m + i - 1);
}

Rational c_psi(const CSignature& sig, const CTable& t, int r) {
  return c_entry(sig, t, 0, r + 1) - c_entry(sig, t, 0, r);
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void gz_pair_violations(const GzSignature& sig, const GzTable& t, int j, std::vector<Violation>* out) {
  auto m = [&](int i, int row) -> const Rational& { return gz_entry(sig, t, i, row); };
  Rational theta = m(1, j + 1) - m(1, j);
  if (theta != 0 && theta != 1) {
    out->push_back({"theta-range", j, 1, "theta_" + std::to_string(j) + " = " + theta.get_str() + " not in {0,1}"});
  }
  for (int i = 2; i <= j; ++i) {
    if (!is_nonneg_integer(m(i, j + 1) - m(i, j))) {
      out->push_back({"betweenness-upper", j, i,
                      "m_{" + std::to_string(i) + "," + std::to_string(j + 1) + "} - m_{" + std::to_string(i) + "," +
                          std::to_string(j) + "} not in Z+"});
    }
    if (!is_nonneg_integer(m(i, j) - m(i + 1, j + 1))) {
      out->push_back({"betweenness-lower", j, i,
                      "m_{" + std::to_string(i) + "," + std::to_string(j) + "} - m_{" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + "} not in Z+"});
    }
  }
}

std::string cell(int i, int r) { return "M_{" + std::to_string(i) + "," + std::to_string(r) + "}"; }

// Conditions linking row r with row r + 1 of a two-sided table.
void c_pair_violations(const CSignature& sig, const CTable& t, int r, std::vector<Violation>* out) {
  auto M = [&](int i, int row) -> const Rational& { return c_entry(sig, t, i, row); };
  auto need = [&](const Rational& d, bool strict, int col, const std::string& text) {
    if (!is_nonneg_integer(d) || (strict && d == 0)) {
      out->push_back({"betweenness", r, col, text + (strict ? " not in N" : " not in Z+")});
    }
  };
  Rational psi = M(0, r + 1) - M(0, r);
  if (r % 2 == 0) {
    int k = r / 2;  // rows 2k (window [-k, k-1]) and 2k + 1 (window [-k, k])
    if (psi != 0 && psi != 1) {
      out->push_back({"psi-range", r, 0, "psi_" + std::to_string(r) + " = " + psi.get_str() + " not in {0,1}"});
    }
    for (int i = -k; i <= k - 1; ++i) {
      if (i == 0) continue;
      need(M(i, r + 1) - M(i, r), false, i, cell(i, r + 1) + " - " + cell(i, r));
    }
    for (int i = -k + 1; i <= k; ++i) {
      if (i == 0 || i == 1) continue;
      need(M(i - 1, r) - M(i, r + 1), false, i - 1, cell(i - 1, r) + " - " + cell(i, r + 1));
    }
    need(M(-1, r) - M(1, r + 1), true, -1, cell(-1, r) + " - " + cell(1, r + 1));
  } else {
    int k = (r + 1) / 2;  // rows 2k - 1 (window [-k+1, k-1]) and 2k (window [-k, k-1])
    if (psi != 0 && psi != -1) {
      out->push_back({"psi-range", r, 0, "psi_" + std::to_string(r) + " = " + psi.get_str() + " not in {0,-1}"});
    }
    for (int i = -k + 1; i <= k - 1; ++i) {
      if (i == 0) continue;
      need(M(i, r) - M(i, r + 1), false, i, cell(i, r) + " - " + cell(i, r + 1));
    }
    for (int i = -k + 1; i <= k - 1; ++i) {
      if (i == 0 || i == 1) continue;
      need(M(i - 1, r + 1) - M(i, r), false, i, cell(i - 1, r + 1) + " - " + cell(i, r));
    }
    if (k >= 2) need(M(-1, r + 1) - M(1, r), true, 1, cell(-1, r + 1) + " - " + cell(1, r));
  }
}

template <class Sig, class Table>
void shape_violations(const Sig& sig, const Table& t, int expected_rows, bool infinite,
                      const std::function<int(int)>& row_len, const std::function<Row(int)>& top,
                      std::vector<Violation>* out) {
  (void)sig;
  if (!infinite && static_cast<int>(t.rows.size()) != expected_rows) {
    out->push_back({"shape", 0, 0,
                    "expected " + std::to_string(expected_rows) + " rows, got " + std::to_string(t.rows.size())});
    return;
  }
  for (std::size_t r = 1; r <= t.rows.size(); ++r) {
    if (static_cast<int>(t.rows[r - 1].size()) != row_len(static_cast<int>(r))) {
      out->push_back({"shape", static_cast<int>(r), 0, "row has wrong length"});
    }
  }
  if (!infinite && !t.rows.empty() && t.rows.back() != top(expected_rows)) {
    out->push_back({"top-row", expected_rows, 0, "top row differs from the signature"});
  }
}

}  // namespace

std::string describe(const Violation& v) {
  return v.condition + " at row " + std::to_string(v.row) + ", column " + std::to_string(v.column) + ": " + v.detail;
}

bool gz_pair_ok(const GzSignature& sig, const GzTable& t, int j) {
  std::vector<Violation> out;
  gz_pair_violations(sig, t, j, &out);
  return out.empty();
}

bool c_pair_ok(const CSignature& sig, const CTable& t, int r) {
  std::vector<Violation> out;
  c_pair_violations(sig, t, r, &out);
  return out.empty();
}

std::vector<Violation> gz_validate(const GzSignature& sig, const GzTable& t) {
  std::vector<Violation> out;
  shape_violations(sig, t, sig.length(), sig.is_infinite(), [](int j) { return j; },
                   [&](int j) { return sig.prefix(j); }, &out);
  if (!out.empty()) return out;
  int last = sig.is_infinite() ? static_cast<int>(t.rows.size()) : sig.length() - 1;
  for (int j = 1; j <= last; ++j) gz_pair_violations(sig, t, j, &out);
  return out;
}

std::vector<Violation> c_validate(const CSignature& sig, const CTable& t) {
  std::vector<Violation> out;
  shape_violations(sig, t, sig.top_row(), sig.is_infinite(), [](int r) { return r; },
                   [&](int r) { return sig.window(r); }, &out);
  if (!out.empty()) return out;
  int last = sig.is_infinite() ? static_cast<int>(t.rows.size()) : sig.top_row() - 1;
  for (int r = 1; r <= last; ++r) c_pair_violations(sig, t, r, &out);
  return out;
}

void canonicalize(const GzSignature& sig, GzTable& t) {
  if (!sig.is_infinite()) return;
  while (!t.rows.empty() && t.rows.back() == sig.prefix(static_cast<int>(t.rows.size()))) t.rows.pop_back();
}

void canonicalize(const CSignature& sig, CTable& t) {
  if (!sig.is_infinite()) return;
  while (!t.rows.empty() && t.rows.back() == sig.window(static_cast<int>(t.rows.size()))) t.rows.pop_back();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Choice {
  Rational hi;
  long steps;  // values hi, hi - 1, ..., hi - steps
};

// Walks all rows below `upper` given per-entry descending ranges, depth-first,
// with the first entry most significant; `emit` receives each completed row.
void odometer(const std::vector<Choice>& choices, const std::function<void(const Row&)>& emit) {
  for (const auto& c : choices) {
    if (c.steps < 0) return;
  }
  std::vector<long> idx(choices.size(), 0);
  Row row(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) row[i] = choices[i].hi - idx[i];
    emit(row);
    std::size_t pos = choices.size();
    while (pos > 0) {
      --pos;
      if (idx[pos] < choices[pos].steps) {
        ++idx[pos];
        std::fill(idx.begin() + static_cast<long>(pos) + 1, idx.end(), 0);
        break;
      }
      if (pos == 0) return;
    }
    if (choices.empty()) return;
  }
}

std::vector<Choice> gz_choices(const Row& upper) {
  // upper has length j + 1; produce the ranges for row j.
  std::size_t j = upper.size() - 1;
  std::vector<Choice> out;
  out.push_back({upper[0], 1});
  for (std::size_t i = 1; i < j; ++i) out.push_back({upper[i], steps_between(upper[i + 1], upper[i])});
  return out;
}

std::vector<Choice> c_choices(const Row& upper, int r_upper) {
  // Ranges for row r = r_upper - 1 given row r_upper, indices in C convention.
  int r = r_upper - 1;
  auto U = [&](int i) -> const Rational& { return upper[static_cast<std::size_t>(i - c_lo(r_upper))]; };
  std::vector<Choice> out;
  if (r % 2 == 0) {
    int k = r / 2;
    for (int i = -k; i <= k - 1; ++i) {
      if (i == 0) {
        out.push_back({U(0), 1});
      } else if (i <= -2) {
        out.push_back({U(i), steps_between(U(i + 1), U(i))});
      } else if (i == -1) {
        out.push_back({U(-1), steps_between(U(1) + 1, U(-1))});
      } else {
        out.push_back({U(i), steps_between(U(i + 1), U(i))});
      }
    }
  } else {
    int k = (r + 1) / 2;
    for (int i = -k + 1; i <= k - 1; ++i) {
      if (i == 0) {
        out.push_back({U(0) + 1, 1});
      } else if (i == 1) {
        out.push_back({U(-1) - 1, steps_between(U(1), U(-1) - 1)});
      } else {
        out.push_back({U(i - 1), steps_between(U(i), U(i - 1))});
      }
    }
  }
  return out;
}

template <class Table, class ChoiceFn>
std::vector<Table> enumerate_rows(const Row& top, int top_row, std::size_t guard, ChoiceFn choices_for) {
  std::vector<Table> out;
  std::vector<Row> stack(static_cast<std::size_t>(top_row));
  stack.back() = top;
  std::function<void(int)> descend = [&](int r) {  // fill row r given row r + 1
    if (r == 0) {
      if (out.size() >= guard) throw Error(ErrorCode::GuardExceeded, "more than " + std::to_string(guard) + " tables");
      out.push_back(Table{stack});
      return;
    }
    odometer(choices_for(stack[static_cast<std::size_t>(r)], r + 1), [&](const Row& row) {
      stack[static_cast<std::size_t>(r - 1)] = row;
      descend(r - 1);
    });
  };
  descend(top_row - 1);
  return out;
}

}  // namespace

std::vector<GzTable> gz_enumerate(const GzSignature& sig, std::size_t guard) {
  if (sig.is_infinite()) throw Error(ErrorCode::GuardExceeded, "infinite-dimensional module cannot be enumerated");
  if (!gz_is_essentially_typical(sig)) {
    throw Error(ErrorCode::NotEssentiallyTypical, "[" + join(sig.labels()) + "]");
  }
  return enumerate_rows<GzTable>(sig.labels(), sig.length(), guard,
                                 [](const Row& upper, int) { return gz_choices(upper); });
}

std::vector<CTable> c_enumerate(const CSignature& sig, std::size_t guard) {
  if (sig.is_infinite()) throw Error(ErrorCode::GuardExceeded, "infinite-dimensional module cannot be enumerated");
  if (!c_is_essentially_typical(sig)) {
    throw Error(ErrorCode::NotEssentiallyTypical, "[" + join(sig.window(sig.top_row())) + "]");
  }
  return enumerate_rows<CTable>(sig.window(sig.top_row()), sig.top_row(), guard,
                                [](const Row& upper, int r_upper) { return c_choices(upper, r_upper); });
}

GzTable gz_highest_table(const GzSignature& sig) {
  GzTable t;
  if (sig.is_infinite()) return t;
  for (int j = 1; j <= sig.length(); ++j) t.rows.push_back(sig.prefix(j));
  return t;
}

CTable c_highest_table(const CSignature& sig) {
  CTable t;
  if (sig.is_infinite()) return t;
  for (int r = 1; r <= sig.top_row(); ++r) t.rows.push_back(sig.window(r));
  return t;
}

int stability_index(const GzSignature& sig, const GzTable& t) {
  GzTable c = t;
  canonicalize(sig, c);
  return static_cast<int>(c.rows.size());
}

int stability_index(const CSignature& sig, const CTable& t) {
  CTable c = t;
  canonicalize(sig, c);
  return (static_cast<int>(c.rows.size()) + 1) / 2;
}

std::string table_id(const GzTable& t) {
  std::string out;
  for (std::size_t r = t.rows.size(); r > 0; --r) {
    if (r != t.rows.size()) out += "|";
    out += join(t.rows[r - 1]);
  }
  return out;
}

std::string table_id(const CTable& t) {
  std::string out;
  for (std::size_t r = t.rows.size(); r > 0; --r) {
    if (r != t.rows.size()) out += "|";
    out += join(t.rows[r - 1]);
  }
  return out;
}

namespace {

std::string render_rows(const std::vector<Row>& rows) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : rows) {
    std::vector<std::string> c;
    for (const auto& q : row) {
      c.push_back(q.get_str());
      width = std::max(width, c.back().size());
    }
    cells.push_back(std::move(c));
  }
  std::ostringstream os;
  std::size_t top = rows.empty() ? 0 : rows.back().size();
  for (std::size_t r = rows.size(); r > 0; --r) {
    const auto& c = cells[r - 1];
    os << std::string((top - c.size()) * (width + 1) / 2, ' ');
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) os << ' ';
      os << std::string(width - c[i].size(), ' ') << c[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string render(const GzTable& t) { return render_rows(t.rows); }
std::string render(const CTable& t) { return render_rows(t.rows); }

}  // namespace glsuper
