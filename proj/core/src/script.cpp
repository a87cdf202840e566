#include "namecalc/script.hpp"

#include <algorithm>

namespace namecalc {

std::vector<Formula> formula_set(std::vector<Formula> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Formula> set_union(const std::vector<Formula>& x, const std::vector<Formula>& y) {
  std::vector<Formula> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::vector<Formula> set_minus(const std::vector<Formula>& x, const std::vector<Formula>& y) {
  std::vector<Formula> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const std::vector<Formula>& x, const std::vector<Formula>& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

Sequent::Sequent(std::vector<Formula> premises, Formula conclusion)
    : premises_(formula_set(std::move(premises))), conclusion_(std::move(conclusion)) {}

bool Sequent::has_premise(const Formula& f) const {
  return std::binary_search(premises_.begin(), premises_.end(), f);
}

Formula Sequent::as_implication() const {
  if (premises_.empty()) return conclusion_;
  return imp(conj_all(premises_), conclusion_);
}

}  // namespace namecalc
