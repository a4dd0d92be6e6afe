#include "cmsr/collective.hpp"

#include <cassert>
#include <stdexcept>

#include "cmsr/probability.hpp"

namespace cmsr {

namespace {

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Arrival time prefix per route; arr[k][u] is the time at the u-th point,
// arr[k][0] = 0.
std::vector<std::vector<std::int64_t>> arrival_prefixes(const Recommendation& rec,
                                                        const TravelTimeMatrix& travel) {
  std::vector<std::vector<std::int64_t>> arr(rec.k());
  for (int k = 0; k < rec.k(); ++k) {
    const Route& route = rec.routes[k];
    arr[k].resize(route.size() + 1, 0);
    PointId prev = 0;
    for (int u = 1; u <= route.size(); ++u) {
      arr[k][u] = arr[k][u - 1] + travel.at(prev, route.points[u - 1]);
      prev = route.points[u - 1];
    }
  }
  return arr;
}

std::vector<int> route_lengths(const Recommendation& rec) {
  std::vector<int> lengths(rec.k());
  for (int k = 0; k < rec.k(); ++k) lengths[k] = rec.routes[k].size();
  return lengths;
}

}  // namespace

OutcomeTable::OutcomeTable(std::vector<int> route_lengths)
    : lengths_(std::move(route_lengths)), stride_(lengths_.size(), 0) {
  std::size_t size = 1;
  for (std::size_t axis = 0; axis < lengths_.size(); ++axis) {
    stride_[axis] = size;
    size *= static_cast<std::size_t>(lengths_[axis]) + 2;
  }
  p_.assign(size, 0.0);
  s_.assign(size, 0.0);
}

std::size_t OutcomeTable::index_of(const OutcomeVector& u) const {
  assert(u.size() == lengths_.size());
  std::size_t idx = 0;
  for (std::size_t axis = 0; axis < u.size(); ++axis) {
    assert(u[axis] >= 1 && u[axis] <= lengths_[axis] + 1);
    idx += static_cast<std::size_t>(u[axis]) * stride_[axis];
  }
  return idx;
}

std::size_t OutcomeTable::outcome_count() const {
  std::size_t count = 1;
  for (int l : lengths_) count *= static_cast<std::size_t>(l) + 1;
  return count;
}

double OutcomeTable::prob_sum() const {
  KahanSum acc;
  for_each_outcome([&](const OutcomeVector&, double p, double) { acc.add(p); });
  return acc.sum;
}

double OutcomeTable::total() const {
  KahanSum acc;
  for_each_outcome([&](const OutcomeVector&, double p, double s) { acc.add(p * s); });
  return acc.sum;
}

DeltaIndex::DeltaIndex(const std::vector<VisitTuple>& sorted_tuples, int n_points)
    : by_point_(static_cast<std::size_t>(n_points) + 1) {
  for (const VisitTuple& tup : sorted_tuples) by_point_[tup.c].push_back(tup);
}

std::int64_t DeltaIndex::delta(const OutcomeVector& u, const VisitTuple& tup) const {
  const std::vector<VisitTuple>& visits = by_point_[tup.c];
  // locate tup, then walk back to the latest still-cruising visitor
  std::size_t pos = visits.size();
  for (std::size_t i = 0; i < visits.size(); ++i) {
    if (visits[i].k == tup.k && visits[i].u == tup.u) {
      pos = i;
      break;
    }
  }
  if (pos == visits.size()) throw std::invalid_argument("tuple not found at its point");
  for (std::size_t i = pos; i-- > 0;) {
    if (visits[i].u <= u[visits[i].k]) return tup.t - visits[i].t;
  }
  return tup.t;
}

OutcomeTable outcome_table_sa(const Recommendation& rec, const Instance& inst) {
  validate_recommendation(rec, inst.n_points);
  const std::vector<VisitTuple> tuples = arrival_times(rec, inst.travel);
  const auto arr = arrival_prefixes(rec, inst.travel);
  const std::vector<int> lengths = route_lengths(rec);
  const int k_routes = rec.k();
  OutcomeTable table(lengths);
  if (k_routes == 0) return table;
  const PickupModel model(inst);

  std::vector<PointId> touched;  // points visited by any tuple
  for (const VisitTuple& tup : tuples) {
    bool seen = false;
    for (PointId c : touched) seen = seen || (c == tup.c);
    if (!seen) touched.push_back(tup.c);
  }

  std::vector<std::int64_t> last(static_cast<std::size_t>(inst.n_points) + 1, 0);
  OutcomeVector u(k_routes, 1);
  std::size_t idx = 0;
  for (int axis = 0; axis < k_routes; ++axis) idx += table.strides()[axis];

  double* p_arr = table.p_data();
  double* s_arr = table.s_data();
  std::size_t visited = 0;
  for (;;) {
    // probability: one pass over the time-sorted tuples with fresh registers
    for (PointId c : touched) last[c] = 0;
    double p = 1.0;
    for (const VisitTuple& tup : tuples) {
      const int stop = u[tup.k];
      if (tup.u > stop) continue;  // taxi already picked up, not a visitor
      const double prob = model.prob(tup.c, static_cast<double>(tup.t - last[tup.c]));
      p *= (tup.u == stop) ? prob : 1.0 - prob;
      last[tup.c] = tup.t;
    }
    // cruising time: legs through the stopping position, penalty on failure
    std::int64_t s = 0;
    for (int k = 0; k < k_routes; ++k) {
      const int l = lengths[k];
      s += arr[k][u[k] <= l ? u[k] : l];
      if (u[k] == l + 1) s += inst.penalty;
    }
    p_arr[idx] = p;
    s_arr[idx] = static_cast<double>(s);
    ++visited;

    int axis = 0;
    while (axis < k_routes) {
      if (u[axis] <= lengths[axis]) {
        ++u[axis];
        idx += table.strides()[axis];
        break;
      }
      idx -= table.strides()[axis] * static_cast<std::size_t>(u[axis] - 1);
      u[axis] = 1;
      ++axis;
    }
    if (axis == k_routes) break;
  }
  table.states_visited = visited;
  return table;
}

OutcomeTable outcome_table_se(const Recommendation& rec, const Instance& inst) {
  validate_recommendation(rec, inst.n_points);
  const std::vector<VisitTuple> tuples = arrival_times(rec, inst.travel);
  const std::vector<int> lengths = route_lengths(rec);
  const int k_routes = rec.k();
  OutcomeTable table(lengths);
  if (k_routes == 0) return table;
  const PickupModel model(inst);
  const std::vector<std::size_t>& stride = table.strides();
  double* p_arr = table.p_data();
  double* s_arr = table.s_data();

  // all-ones state: every (empty) route fails, one penalty each
  std::vector<int> extent(k_routes, 1);  // digits on axis k run 1..extent[k]
  {
    std::size_t idx0 = 0;
    for (int axis = 0; axis < k_routes; ++axis) idx0 += stride[axis];
    p_arr[idx0] = 1.0;
    s_arr[idx0] = static_cast<double>(k_routes) * static_cast<double>(inst.penalty);
  }
  std::size_t visited = 1;

  struct Visit {
    std::int64_t t;
    int k;
    int u;
  };
  std::vector<std::vector<Visit>> visitors(static_cast<std::size_t>(inst.n_points) + 1);
  std::vector<double> palette;  // P(c, t - last) per candidate predecessor

  for (const VisitTuple& tup : tuples) {
    const int k = tup.k;
    const Route& route = rec.routes[k];
    const PointId prev = tup.u == 1 ? 0 : route.points[tup.u - 2];
    const double leg = static_cast<double>(inst.travel.at(prev, tup.c));
    const double penalty = static_cast<double>(inst.penalty);
    const std::vector<Visit>& seen = visitors[tup.c];

    // palette[i + 1] caches the pickup probability when the latest cruising
    // visitor is seen[i]; palette[0] covers the first-visit case (last = 0)
    palette.assign(seen.size() + 1, -1.0);

    // every state with u_k at the current failure slot splits in two
    OutcomeVector digits(k_routes, 1);
    digits[k] = extent[k];
    std::size_t idx = 0;
    for (int axis = 0; axis < k_routes; ++axis)
      idx += static_cast<std::size_t>(digits[axis]) * stride[axis];
    for (;;) {
      std::int64_t last = 0;
      std::size_t key = 0;
      for (std::size_t i = seen.size(); i-- > 0;) {
        if (seen[i].u <= digits[seen[i].k]) {
          last = seen[i].t;
          key = i + 1;
          break;
        }
      }
      double prob = palette[key];
      if (prob < 0.0) {
        prob = model.prob(tup.c, static_cast<double>(tup.t - last));
        palette[key] = prob;
      }
      const std::size_t cont = idx + stride[k];
      p_arr[cont] = p_arr[idx] * (1.0 - prob);
      p_arr[idx] *= prob;
      s_arr[cont] = s_arr[idx] + leg;
      s_arr[idx] += leg - penalty;
      ++visited;

      int axis = 0;
      while (axis < k_routes) {
        if (axis == k) {
          ++axis;
          continue;
        }
        if (digits[axis] < extent[axis]) {
          ++digits[axis];
          idx += stride[axis];
          break;
        }
        idx -= stride[axis] * static_cast<std::size_t>(digits[axis] - 1);
        digits[axis] = 1;
        ++axis;
      }
      if (axis == k_routes) break;
    }

    visitors[tup.c].push_back(Visit{tup.t, k, tup.u});
    ++extent[k];
  }
  table.states_visited = visited;
  return table;
}

double evaluate_sa(const Recommendation& rec, const Instance& inst) {
  return outcome_table_sa(rec, inst).total();
}

double evaluate_se(const Recommendation& rec, const Instance& inst) {
  return outcome_table_se(rec, inst).total();
}

double evaluate(const Recommendation& rec, const Instance& inst, Engine engine) {
  return engine == Engine::SA ? evaluate_sa(rec, inst) : evaluate_se(rec, inst);
}

}  // namespace cmsr
