#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glsuper/scalar.hpp"

namespace glsuper {

using Row = std::vector<Rational>;

inline constexpr std::size_t kDefaultEnumerationGuard = 100000;

// A row of length r = 2k + theta in the two-sided layout holds the indices
// [c_lo(r), c_hi(r)] = [-k, k - 1 + theta].
inline int c_lo(int r) { return -(r / 2); }
inline int c_hi(int r) { return (r - 1) / 2; }
inline int level_k(int r) { return r / 2; }
inline int level_theta(int r) { return r % 2; }

// ---------------------------------------------------------------------------
// Signatures

class GzSignature {
 public:
  // [m_1, ..., m_{N+1}]
  static GzSignature finite(Row labels);
  // [m_1, ..., m_K]; m_i = m_K for every i > K.
  static GzSignature infinite(Row head);

  bool is_infinite() const { return infinite_; }
  const Row& labels() const { return labels_; }
  int length() const { return static_cast<int>(labels_.size()); }
  // N for gl(1|N); only meaningful for finite signatures.
  int rank() const { return length() - 1; }
  // 1-based label; infinite signatures repeat their last label.
  const Rational& label(int i) const;
  Row prefix(int j) const;

  friend bool operator==(const GzSignature& a, const GzSignature& b) {
    return a.infinite_ == b.infinite_ && a.labels_ == b.labels_;
  }

 private:
  bool infinite_ = false;
  Row labels_;
};

class CSignature {
 public:
  // Labels of a top row of length r, listed for i = c_lo(r), ..., c_hi(r).
  static CSignature finite(const Row& window);
  // tail = [M_0, M_1, ..., M_p] (M_i = M_p beyond), neg = [M_{-1}, ..., M_{-q}]
  // (M_{-i} = M_{-q} beyond).
  static CSignature infinite(const Row& tail, const Row& neg);

  bool is_infinite() const { return infinite_; }
  // Length of the top row; only meaningful for finite signatures.
  int top_row() const { return top_; }
  const Rational& label(int i) const;
  Row window(int r) const;
  const Rational& m0() const { return m0_; }
  const Row& negative() const { return neg_; }
  const Row& positive() const { return pos_; }

  friend bool operator==(const CSignature& a, const CSignature& b) {
    return a.infinite_ == b.infinite_ && a.top_ == b.top_ && a.m0_ == b.m0_ && a.neg_ == b.neg_ &&
           a.pos_ == b.pos_;
  }

 private:
  bool infinite_ = false;
  int top_ = 0;
  Rational m0_;
  Row neg_;  // M_{-1}, M_{-2}, ...
  Row pos_;  // M_1, M_2, ...
};

bool gz_is_essentially_typical(const GzSignature& sig);
bool c_is_essentially_typical(const CSignature& sig);

// ---------------------------------------------------------------------------
// Tables. rows[j - 1] is row j. Finite tables store every row including the
// top row; infinite tables store rows up to the last one that deviates from
// the signature (canonical form), all higher rows being the signature.

struct GzTable {
  std::vector<Row> rows;

  friend bool operator==(const GzTable& a, const GzTable& b) { return a.rows == b.rows; }
  friend bool operator<(const GzTable& a, const GzTable& b) { return a.rows < b.rows; }
};

struct CTable {
  std::vector<Row> rows;  // rows[r - 1] indexed from c_lo(r)

  friend bool operator==(const CTable& a, const CTable& b) { return a.rows == b.rows; }
  friend bool operator<(const CTable& a, const CTable& b) { return a.rows < b.rows; }
};

struct Violation {
  std::string condition;
  int row = 0;     // lower row of the offending pair (or the row itself)
  int column = 0;  // entry index in that row's own convention
  std::string detail;
};

std::string describe(const Violation& v);

// Entry m_{ij}; rows above the stored ones come from the signature.
const Rational& gz_entry(const GzSignature& sig, const GzTable& t, int i, int j);
Rational gz_l(const GzSignature& sig, const GzTable& t, int i, int j);
Rational gz_theta(const GzSignature& sig, const GzTable& t, int i);

const Rational& c_entry(const CSignature& sig, const CTable& t, int i, int r);
Rational c_L(const CSignature& sig, const CTable& t, int i, int r);
Rational c_psi(const CSignature& sig, const CTable& t, int r);

// Checks only the pair (row j, row j + 1); used after local edits.
bool gz_pair_ok(const GzSignature& sig, const GzTable& t, int j);
bool c_pair_ok(const CSignature& sig, const CTable& t, int r);

std::vector<Violation> gz_validate(const GzSignature& sig, const GzTable& t);
std::vector<Violation> c_validate(const CSignature& sig, const CTable& t);

// Drops trailing rows equal to the signature (infinite tables only).
void canonicalize(const GzSignature& sig, GzTable& t);
void canonicalize(const CSignature& sig, CTable& t);

// Finite: all tables with the signature's top row, in descending
// lexicographic order (rows top-down, entries left to right).
std::vector<GzTable> gz_enumerate(const GzSignature& sig, std::size_t guard = kDefaultEnumerationGuard);
std::vector<CTable> c_enumerate(const CSignature& sig, std::size_t guard = kDefaultEnumerationGuard);

GzTable gz_highest_table(const GzSignature& sig);
CTable c_highest_table(const CSignature& sig);

// GZ: smallest N with every row j > N equal to the signature.
// C: smallest N with every row 2k + theta - 1, k > N, equal to the signature.
int stability_index(const GzSignature& sig, const GzTable& t);
int stability_index(const CSignature& sig, const CTable& t);

// Text id used in matrix output, rows top-down: "1/2,3|1/2".
std::string table_id(const GzTable& t);
std::string table_id(const CTable& t);

// Triangular rendering, top row first.
std::string render(const GzTable& t);
std::string render(const CTable& t);

}  // namespace glsuper
