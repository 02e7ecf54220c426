#include "vlie/span.hpp"

namespace vlie {

ElementSpan::Row ElementSpan::to_row(const Element& e) {
  mpz_class lcm = 1;
  for (const auto& [k, c] : e) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  Row row;
  for (const auto& [k, c] : e) row.emplace(k, mpz_class(c.get_num() * (lcm / c.get_den())));
  make_primitive(row);
  return row;
}

void ElementSpan::make_primitive(Row& row) {
  mpz_class g = 0;
  for (const auto& [k, c] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& [k, c] : row) c /= g;
}

void ElementSpan::reduce(Row& row) const {
  // Pivots of stored rows are their smallest keys, so eliminating the current
  // smallest key of `row` only creates entries at larger keys.
  auto it = row.begin();
  while (it != row.end()) {
    auto pivot = rows_.find(it->first);
    if (pivot == rows_.end()) {
      ++it;
      continue;
    }
    const DTerm key = it->first;
    const mpz_class a = pivot->second.begin()->second;  // pivot entry of stored row
    const mpz_class b = it->second;
    for (auto& [k, c] : row) c *= a;
    for (const auto& [k, c] : pivot->second) {
      auto& slot = row[k];
      slot -= b * c;
    }
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    make_primitive(row);
    it = row.upper_bound(key);
  }
}

bool ElementSpan::insert(const Element& e) {
  Row row = to_row(e);
  reduce(row);
  // A reduced row has no entry on any stored pivot, so its leading key is a new pivot.
  if (row.empty()) return false;
  const DTerm pivot = row.begin()->first;
  rows_.emplace(pivot, std::move(row));
  return true;
}

bool ElementSpan::contains(const Element& e) const {
  Row row = to_row(e);
  reduce(row);
  return row.empty();
}

}  // namespace vlie
