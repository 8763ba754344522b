#pragma once

// Certificates as plain data, and a checker that replays them against the
// base category without the functors that produced them.
//
// A serialized certificate lists every zig-zag of its source stage, the
// image of each zig-zag under each functor, each functor's column map, and
// every transformation component. The replay enumerates zig-zags and
// ladders itself and re-checks: the zig-zag list is complete, images are
// zig-zags of the target stage, every functor sends every ladder to a
// ladder, every component is a ladder, and every naturality square
// commutes.

#include "hammock/homcert.hpp"
#include "hammock/report.hpp"
#include "hammock/theorems.hpp"

namespace hammock {

/// Throws std::invalid_argument if a functor has no column map.
Json serialize_certificate(const HomotopyCertificate& cert);
Json serialize_family(const StageWitnessFamily& family);

/// Failures name the step, zig-zag or ladder, and column.
Check replay_certificate(const RelCat& r, const Json& cert);
/// For certificates whose source stage lives over another category.
Check replay_certificate(const RelCat& source, const RelCat& target, const Json& cert);
/// Every certificate plus the inclusion compatibility between consecutive
/// stages.
Check replay_family(const RelCat& r, const Json& family);
Check replay_family(const RelCat& source, const RelCat& target, const Json& family);

}  // namespace hammock
