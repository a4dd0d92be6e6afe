#include "cmsr/single_route.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmsr/probability.hpp"
#include "parallel.hpp"

namespace cmsr {

double single_ptt(const Route& route, const Instance& inst) {
  if (route.empty()) throw std::invalid_argument("cannot score an empty route");
  const PickupModel model(inst);
  double survive = 1.0;  // probability of failing at every point so far
  double ptt = 0.0;
  std::int64_t t = 0;
  PointId prev = 0;
  for (PointId c : route.points) {
    t += inst.travel.at(prev, c);
    const double prob = model.prob(c, static_cast<double>(t));
    ptt += survive * prob * static_cast<double>(t);
    survive *= 1.0 - prob;
    prev = c;
  }
  ptt += survive * static_cast<double>(t + inst.penalty);
  return ptt;
}

RouteEnumerator::RouteEnumerator(int n_points, int length)
    : n_(n_points), len_(length), used_(static_cast<std::size_t>(n_points) + 1, false) {
  if (length < 1 || length > n_points) {
    throw std::invalid_argument("enumeration length must be in 1..n_points");
  }
  current_.resize(length);
  for (int i = 0; i < length; ++i) {
    current_[i] = i + 1;
    used_[i + 1] = true;
  }
}

std::optional<Route> RouteEnumerator::next() {
  if (done_) return std::nullopt;
  if (first_) {
    first_ = false;
    return Route{current_};
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Route{current_};
}

bool RouteEnumerator::advance() {
  int pos = len_ - 1;
  while (pos >= 0) {
    used_[current_[pos]] = false;
    PointId cand = current_[pos] + 1;
    while (cand <= n_ && used_[cand]) ++cand;
    if (cand <= n_) {
      current_[pos] = cand;
      used_[cand] = true;
      // fill the tail with the smallest unused ids in ascending order
      for (int i = pos + 1; i < len_; ++i) {
        PointId c = 1;
        while (used_[c]) ++c;
        current_[i] = c;
        used_[c] = true;
      }
      return true;
    }
    --pos;
  }
  return false;
}

std::uint64_t route_count(int n_points, int length) {
  std::uint64_t count = 1;
  for (int i = 0; i < length; ++i) count *= static_cast<std::uint64_t>(n_points - i);
  return count;
}

namespace {

// total order: PTT first, then point sequence
bool score_less(const RouteScore& a, const RouteScore& b) {
  if (a.ptt != b.ptt) return a.ptt < b.ptt;
  return a.route.points < b.route.points;
}

// keeps the k smallest scores seen; heap top is the current worst
class BoundedBest {
 public:
  explicit BoundedBest(std::size_t k) : k_(k) {}

  void offer(RouteScore score) {
    if (heap_.size() < k_) {
      heap_.push_back(std::move(score));
      std::push_heap(heap_.begin(), heap_.end(), score_less);
    } else if (score_less(score, heap_.front())) {
      std::pop_heap(heap_.begin(), heap_.end(), score_less);
      heap_.back() = std::move(score);
      std::push_heap(heap_.begin(), heap_.end(), score_less);
    }
  }

  std::vector<RouteScore> sorted() && {
    std::sort_heap(heap_.begin(), heap_.end(), score_less);
    return std::move(heap_);
  }

  std::vector<RouteScore>& entries() { return heap_; }

 private:
  std::size_t k_;
  std::vector<RouteScore> heap_;
};

// Scores every route starting at `first`. The suffix space is the ordered
// (length-1)-sequences over the remaining ids, enumerated through an id
// remapping that preserves lexicographic order.
void score_partition(const Instance& inst, PointId first, int length, BoundedBest& best) {
  if (length == 1) {
    Route route{{first}};
    best.offer(RouteScore{route, single_ptt(route, inst)});
    return;
  }
  RouteEnumerator suffixes(inst.n_points - 1, length - 1);
  Route route;
  route.points.resize(length);
  route.points[0] = first;
  while (auto suffix = suffixes.next()) {
    for (int i = 0; i < length - 1; ++i) {
      const PointId v = suffix->points[i];
      route.points[i + 1] = v < first ? v : v + 1;
    }
    best.offer(RouteScore{route, single_ptt(route, inst)});
  }
}

}  // namespace

std::vector<RouteScore> best_routes(const Instance& inst, int k, int threads) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int length = inst.route_len;
  std::vector<BoundedBest> partial(inst.n_points, BoundedBest(static_cast<std::size_t>(k)));
  detail::parallel_for(static_cast<std::size_t>(inst.n_points), threads, [&](std::size_t i) {
    score_partition(inst, static_cast<PointId>(i + 1), length, partial[i]);
  });
  BoundedBest merged(static_cast<std::size_t>(k));
  for (BoundedBest& part : partial) {
    for (RouteScore& score : part.entries()) merged.offer(std::move(score));
  }
  return std::move(merged).sorted();
}

Recommendation top_k_routes(const Instance& inst, int threads) {
  const std::vector<RouteScore> best = best_routes(inst, inst.fleet, threads);
  Recommendation rec;
  rec.routes.reserve(inst.fleet);
  // fewer distinct routes than taxis: wrap around (duplicates are legal)
  for (int k = 0; k < inst.fleet; ++k) {
    rec.routes.push_back(best[static_cast<std::size_t>(k) % best.size()].route);
  }
  return rec;
}

double lower_bound(const Instance& inst, int threads) {
  return static_cast<double>(inst.fleet) * best_routes(inst, 1, threads)[0].ptt;
}

}  // namespace cmsr
