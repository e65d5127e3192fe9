#include "bwc/error.hpp"

namespace bwc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::size: return "size error";
    case Errc::precondition: return "precondition error";
    case Errc::undefined_level: return "undefined-level error";
    case Errc::membership: return "membership error";
    case Errc::saturation: return "saturation error";
    case Errc::mixed_ambient: return "mixed-ambient error";
    case Errc::rank_mismatch: return "rank-mismatch error";
    case Errc::non_integral: return "non-integral error";
    case Errc::non_dyadic: return "non-dyadic error";
    case Errc::not_invariant: return "non-invariance error";
    case Errc::group_shape: return "group-shape error";
    case Errc::budget: return "budget error";
    case Errc::internal: return "internal consistency error";
    case Errc::parse: return "parse error";
  }
  return "error";
}

}  // namespace bwc

