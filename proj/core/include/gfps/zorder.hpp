#ifndef GFPS_ZORDER_HPP
#define GFPS_ZORDER_HPP

namespace gfps {

/// Signed object multiplicity.
using Count = long long;

/// The partial order `n << m` on the integers used by hybrid-set subsethood.
///
/// 0 is the unique minimum, every negative sits below every positive, and on
/// integers of equal sign the order coincides with the usual <=. So, e.g.,
/// 0 << n for all n, 3 << 4, -3 << 4, and -4 << -3, while 4 << 3, 3 << -4
/// and -3 << -4 all fail. The resulting order is total:
/// 0 << ... << -2 << -1 << 1 << 2 << ...
inline bool ll(Count n, Count m) noexcept {
  if (n == 0) return true;
  if (n > 0) return m > 0 && n <= m;
  return m > 0 || (m < 0 && n <= m);
}

}  // namespace gfps

#endif
