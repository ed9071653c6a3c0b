#include "test_util.hpp"

namespace testfx {

const hodge::context_ptr& ctx3() {
  static hodge::context_ptr ctx = hodge::make_context(3);
  return ctx;
}

hodge::HodgeRecursion& rec3() {
  static hodge::HodgeRecursion rec(ctx3());
  return rec;
}

}  // namespace testfx
