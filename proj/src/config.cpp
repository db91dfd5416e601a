#include "sigma/config.hpp"

namespace sigma {

namespace {
Limits& global_limits() {
  static Limits l;
  return l;
}
}  // namespace

Limits const& limits() { return global_limits(); }

void set_limits(Limits const& l) { global_limits() = l; }

ScopedLimits::ScopedLimits(Limits const& l) : saved_(limits()) { set_limits(l); }

ScopedLimits::~ScopedLimits() { set_limits(saved_); }

}  // namespace sigma
