#ifndef MULTIDEG_ORDER_HPP
#define MULTIDEG_ORDER_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace multideg {

using ExponentVector = std::vector<int>;

inline ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExponentVector exp_sub(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool exp_divides(const ExponentVector& a, const ExponentVector& b) {
  // a | b componentwise
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExponentVector exp_lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline ExponentVector exp_gcd(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline long total_degree(const ExponentVector& a) {
  return std::accumulate(a.begin(), a.end(), 0L);
}

enum class TieBreak { GrevLex, Lex };
enum class ModuleRule { TermOverPosition, PositionOverTerm };

/// Term order on monomials of a free module: a chain of integer weight rows
/// (each optionally shifted per module component), refined by a classical
/// tie-break order, with the component handled by the module rule.
/// Lower component index compares as larger.
class MonomialOrder {
 public:
  struct WeightRow {
    std::vector<long> weights;          // one per ring variable
    std::vector<long> component_shift;  // empty = all zero
  };

  MonomialOrder() = default;

  static MonomialOrder grevlex(int nvars) {
    MonomialOrder o;
    o.nvars_ = nvars;
    return o;
  }

  static MonomialOrder lex(int nvars) {
    MonomialOrder o;
    o.nvars_ = nvars;
    o.tie_ = TieBreak::Lex;
    return o;
  }

  MonomialOrder& add_weight(std::vector<long> w, std::vector<long> shifts = {}) {
    if (static_cast<int>(w.size()) != nvars_)
      throw std::invalid_argument("MonomialOrder: weight row length mismatch");
    rows_.push_back({std::move(w), std::move(shifts)});
    return *this;
  }

  /// Weight rows stacked in front of the existing chain.
  MonomialOrder with_weight_front(std::vector<long> w,
                                  std::vector<long> shifts = {}) const {
    MonomialOrder o = *this;
    o.rows_.insert(o.rows_.begin(), {std::move(w), std::move(shifts)});
    return o;
  }

  MonomialOrder& set_module_rule(ModuleRule r) {
    rule_ = r;
    return *this;
  }

  MonomialOrder& set_tie_break(TieBreak t) {
    tie_ = t;
    return *this;
  }

  /// Restrict the tie-break to the given variables; the remaining variables
  /// (parameters) are compared last, lexicographically. This is the
  /// parametric order: main part first, parameter exponents as final tie.
  MonomialOrder& set_main_block(const std::vector<int>& main_vars) {
    main_mask_.assign(nvars_, 0);
    for (int v : main_vars) main_mask_.at(v) = 1;
    return *this;
  }

  /// Schreyer order induced by leading terms of a basis in the previous
  /// module: (a,i) < (b,j) iff a*lead(i) < b*lead(j) under the base order,
  /// ties broken by smaller basis index comparing larger.
  static MonomialOrder schreyer(std::shared_ptr<const MonomialOrder> base,
                                std::vector<ExponentVector> lead_exps,
                                std::vector<int> lead_comps) {
    MonomialOrder o;
    o.nvars_ = base->nvars_;
    o.schreyer_base_ = std::move(base);
    o.schreyer_exp_ = std::move(lead_exps);
    o.schreyer_comp_ = std::move(lead_comps);
    return o;
  }

  int nvars() const { return nvars_; }
  bool is_schreyer() const { return schreyer_base_ != nullptr; }

  long weight_of(const WeightRow& row, const ExponentVector& a, int comp) const {
    long s = 0;
    for (int i = 0; i < nvars_; ++i) s += row.weights[i] * a[i];
    if (!row.component_shift.empty()) s += row.component_shift.at(comp);
    return s;
  }

  /// -1, 0, +1 comparing (a, comp_a) against (b, comp_b).
  int compare(const ExponentVector& a, int ca, const ExponentVector& b,
              int cb) const {
    if (schreyer_base_) {
      int c = schreyer_base_->compare(exp_add(a, schreyer_exp_.at(ca)),
                                      schreyer_comp_.at(ca),
                                      exp_add(b, schreyer_exp_.at(cb)),
                                      schreyer_comp_.at(cb));
      if (c != 0) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
    if (rule_ == ModuleRule::PositionOverTerm && ca != cb)
      return ca < cb ? 1 : -1;
    for (const auto& row : rows_) {
      long wa = weight_of(row, a, ca);
      long wb = weight_of(row, b, cb);
      if (wa != wb) return wa < wb ? -1 : 1;
    }
    int c = tie_compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

  int compare(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, 0, b, 0);
  }

  /// True when every descending chain terminates: down the refinement
  /// chain, the first nonzero weight seen for each variable must be
  /// positive (the graded tie-break covers variables with all-zero weights).
  bool is_well_order() const {
    if (schreyer_base_) return schreyer_base_->is_well_order();
    for (int v = 0; v < nvars_; ++v) {
      for (const auto& row : rows_) {
        if (row.weights[v] != 0) {
          if (row.weights[v] < 0) return false;
          break;
        }
      }
    }
    return true;
  }

 private:
  bool in_main(int i) const { return main_mask_.empty() || main_mask_[i]; }

  int tie_compare(const ExponentVector& a, const ExponentVector& b) const {
    if (tie_ == TieBreak::Lex) {
      for (int i = 0; i < nvars_; ++i)
        if (in_main(i) && a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    } else {
      long da = 0, db = 0;
      for (int i = 0; i < nvars_; ++i)
        if (in_main(i)) da += a[i], db += b[i];
      if (da != db) return da < db ? -1 : 1;
      for (int i = nvars_ - 1; i >= 0; --i)
        if (in_main(i) && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    if (!main_mask_.empty())
      for (int i = 0; i < nvars_; ++i)
        if (!main_mask_[i] && a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  int nvars_ = 0;
  std::vector<WeightRow> rows_;
  TieBreak tie_ = TieBreak::GrevLex;
  std::vector<char> main_mask_;
  ModuleRule rule_ = ModuleRule::TermOverPosition;
  std::shared_ptr<const MonomialOrder> schreyer_base_;
  std::vector<ExponentVector> schreyer_exp_;
  std::vector<int> schreyer_comp_;
};

}  // namespace multideg

#endif
