#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cmsr/core.hpp"

namespace cmsr {

enum class Engine { SA, SE };

// Dense table over the outcome space of one recommendation. Outcomes are
// indexed by mixed-radix encoding of u with radix l_k + 2 on axis k, keeping
// the natural 1-based digits (slot 0 is unused). p holds outcome
// probabilities, s total cruising seconds.
class OutcomeTable {
 public:
  OutcomeTable() = default;
  explicit OutcomeTable(std::vector<int> route_lengths);

  int k() const { return static_cast<int>(lengths_.size()); }
  const std::vector<int>& lengths() const { return lengths_; }

  std::size_t index_of(const OutcomeVector& u) const;
  double p_of(const OutcomeVector& u) const { return p_[index_of(u)]; }
  double s_of(const OutcomeVector& u) const { return s_[index_of(u)]; }

  // number of complete outcomes, prod_k (l_k + 1)
  std::size_t outcome_count() const;

  // sum of p(u) over complete outcomes; 1 up to rounding
  double prob_sum() const;

  // F = sum of p(u) * s(u), compensated
  double total() const;

  // Visits every complete outcome. Fn is called as fn(u, p, s) with u a
  // const OutcomeVector&.
  template <typename Fn>
  void for_each_outcome(Fn&& fn) const {
    if (lengths_.empty()) return;
    OutcomeVector u(lengths_.size(), 1);
    std::size_t idx = 0;
    for (int axis = 0; axis < k(); ++axis) idx += stride_[axis];
    for (;;) {
      fn(static_cast<const OutcomeVector&>(u), p_[idx], s_[idx]);
      int axis = 0;
      while (axis < k()) {
        if (u[axis] <= lengths_[axis]) {
          ++u[axis];
          idx += stride_[axis];
          break;
        }
        idx -= stride_[axis] * (u[axis] - 1);
        u[axis] = 1;
        ++axis;
      }
      if (axis == k()) return;
    }
  }

  // Distinct states touched while the table was filled: the SE builder counts
  // one per state creation, the SA builder one per enumerated outcome.
  std::size_t states_visited = 0;

  double* p_data() { return p_.data(); }
  double* s_data() { return s_.data(); }
  const std::vector<std::size_t>& strides() const { return stride_; }

 private:
  std::vector<int> lengths_;         // final route length per axis
  std::vector<std::size_t> stride_;  // mixed-radix strides, radix l_k + 2
  std::vector<double> p_;
  std::vector<double> s_;
};

// Per-point chronological lists of visit tuples, for answering inter-visit
// gap queries against a fixed outcome vector.
class DeltaIndex {
 public:
  DeltaIndex(const std::vector<VisitTuple>& sorted_tuples, int n_points);

  // Time since the latest earlier visit to tup.c by a taxi still cruising
  // under u; equals tup.t for a first visit. tup must itself be cruising
  // under u (tup.u <= u[tup.k]).
  std::int64_t delta(const OutcomeVector& u, const VisitTuple& tup) const;

 private:
  std::vector<std::vector<VisitTuple>> by_point_;
};

inline std::int64_t delta_for(const OutcomeVector& u, const VisitTuple& tup,
                              const DeltaIndex& index) {
  return index.delta(u, tup);
}

// Straightforward evaluation: enumerates every outcome vector independently,
// walking the time-sorted tuple list once per outcome. Exponential in K but
// free of shared state, which makes it the oracle for evaluate_se.
OutcomeTable outcome_table_sa(const Recommendation& rec, const Instance& inst);

// Sequential evaluation: one pass over the time-sorted tuples, splitting each
// still-cruising state into a pickup branch and a continue branch. Identical
// values to outcome_table_sa; visits exactly prod_k (l_k + 1) states.
OutcomeTable outcome_table_se(const Recommendation& rec, const Instance& inst);

double evaluate_sa(const Recommendation& rec, const Instance& inst);
double evaluate_se(const Recommendation& rec, const Instance& inst);
double evaluate(const Recommendation& rec, const Instance& inst, Engine engine);

}  // namespace cmsr
