#pragma once

#include "fuzzytl/event.hpp"
#include "fuzzytl/timeline.hpp"

namespace fuzzytl::testing {

// The market/key worked example: three intervals and the four event rows of
// its possibility matrix. Endpoints are fixture values.
struct Example1 {
  TimelinePtr timeline = Timeline::build({{"i1", 0, 10}, {"i2", 10, 25}, {"i3", 25, 30}});
  Event e1{timeline, {{"i1", 0.8}, {"i2", 0.2}, {"i3", 0.0}}};
  Event e2{timeline, {{"i1", 0.2}, {"i2", 0.6}, {"i3", 0.2}}};
  Event e3{timeline, {{"i1", 0.0}, {"i2", 0.2}, {"i3", 0.8}}};
  Event e4{timeline, {{"i1", 0.5}, {"i2", 0.7}, {"i3", 0.5}}};
};

}  // namespace fuzzytl::testing
