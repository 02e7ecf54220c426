#ifndef VLIE_SPAN_HPP
#define VLIE_SPAN_HPP

#include "vlie/formula.hpp"

#include <map>

namespace vlie {

/// Incremental row-echelon basis for a subspace of C[D] (x) S.
/// Rows are kept as primitive integer vectors and reduced fraction-free
/// (cross multiplication followed by content removal), so no rational
/// arithmetic happens during elimination.
class ElementSpan {
 public:
  /// Returns true if the rank grew.
  bool insert(const Element& e);
  bool contains(const Element& e) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  using Row = std::map<DTerm, mpz_class>;
  static Row to_row(const Element& e);
  static void make_primitive(Row& row);
  void reduce(Row& row) const;

  std::map<DTerm, Row> rows_;  // keyed by pivot (smallest key of the row)
};

}  // namespace vlie

#endif  // VLIE_SPAN_HPP
