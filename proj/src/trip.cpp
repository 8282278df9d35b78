#include "haulplan/trip.hpp"

#include <algorithm>

namespace haulplan {

std::string_view to_string(Variant v) {
  return v == Variant::Turntable ? "turntable" : "no_turntable";
}

const PathPlan& TripPlan::manoeuvre_plan() const {
  return std::visit([](const auto& m) -> const PathPlan& { return m.plan; }, manoeuvre);
}

double TripPlan::inbound_length() const {
  double total = 0.0;
  for (const auto& p : inbound) total += p.length();
  return total;
}

double TripPlan::outbound_length() const {
  double total = 0.0;
  for (const auto& p : outbound) total += p.length();
  return total;
}

namespace {

std::vector<const PathPlan*> legs_of(const TripPlan& trip) {
  std::vector<const PathPlan*> legs;
  for (const auto& p : trip.inbound) legs.push_back(&p);
  legs.push_back(&trip.manoeuvre_plan());
  for (const auto& p : trip.outbound) legs.push_back(&p);
  return legs;
}

}  // namespace

double chaining_gap(const TripPlan& trip) {
  const auto legs = legs_of(trip);
  double worst = 0.0;
  for (std::size_t i = 1; i < legs.size(); ++i) {
    const DirectedPoint end = integrate_path(*legs[i - 1]);
    worst = std::max(worst, norm(end.position() - legs[i]->start.position()));
  }
  return worst;
}

std::vector<PathSample> sample_trip(const TripPlan& trip, double step) {
  std::vector<PathSample> out;
  for (const PathPlan* leg : legs_of(trip)) {
    auto pts = sample_path(*leg, step);
    auto first = pts.begin();
    if (!out.empty()) ++first;  // junction already emitted by the previous leg
    out.insert(out.end(), first, pts.end());
  }
  return out;
}

}  // namespace haulplan
