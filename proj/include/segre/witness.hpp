#pragma once

// Explicit Koszul cycles z_{v^1} ^ ... ^ z_{v^p} (x) m that are not
// boundaries, and their machine verification.
//
// Two families: for a = 1^n, row q, the core m = z_{0^{n-1}1} ... z_{0^{n-q}1^q}
// with support between the divisor set D and the annihilator set A; and for
// general a, row 1, the core z_{(0,...,0,1)} with support drawn from the
// points annihilating it.

#include "segre/koszul.hpp"

#include <vector>

namespace segre {

struct CycleSpec {
  DimVector a;
  int p = 0;
  int q = 0;
  /// Ascending in the MultiIndex total order.
  std::vector<MultiIndex> support;
  Monomial core;
};

/// z_{(0^{n-1},1)} z_{(0^{n-2},1^2)} ... z_{(0^{n-q},1^q)}. Requires 1 <= q <= n-1.
Monomial witness_core(int n, int q);

/// 0/1 vectors with a zero among the last q coordinates, together with
/// (0^{n-q},1^q), minus (0,1^i,0^{n-i-1}) for i = 0..q. Size 2^n - 2^{n-q} - q.
/// Sorted in the MultiIndex total order.
std::vector<MultiIndex> annihilator_set(int n, int q);

/// Nonzero (v_1, 0^{n-q-1}, v_{n-q+1}, ..., v_n) other than (1,0^{n-q-1},1^q).
/// Size 2^{q+1} - 2.
std::vector<MultiIndex> divisor_set(int n, int q);

/// Nonzero (i_1, ..., i_{n-1}, 0) together with (0, ..., 0, j), 2 <= j <= a_n.
/// Size (a_1+1)...(a_{n-1}+1) + a_n - 2. Requires n >= 2.
std::vector<MultiIndex> kp1_annihilator_set(const DimVector& a);

/// Cycle for a = 1^n in row q: the divisor set extended by the
/// lexicographically smallest points of A \ D. Requires
/// 2^{q+1} - 2 <= p <= |A|.
CycleSpec ones_cycle_spec(int n, int q, int p);

/// Cycle in row 1 on the first p points of kp1_annihilator_set(a), with
/// core z_{(0,...,0,1)}. Requires 1 <= p <= |kp1_annihilator_set(a)|.
CycleSpec kp1_cycle_spec(const DimVector& a, int p);

/// Coordinates of the cycle in wedge^p R_1 (x) R_q. Throws
/// std::invalid_argument when the support is linearly dependent in R_1.
KoszulVector build_cycle(const KoszulComplex& complex, const CycleSpec& spec);

struct WitnessReport {
  bool is_cycle = false;
  bool is_boundary = false;
};

/// is_cycle: d(c) = 0. is_boundary: c lies in the image of the incoming
/// differential, decided by comparing exact ranks of [M] and [M | c] on the
/// grade of c.
WitnessReport verify_vector(const KoszulComplex& complex, int p, int q, const KoszulVector& c);
WitnessReport verify_witness(const KoszulComplex& complex, const CycleSpec& spec);
WitnessReport verify_witness(const CycleSpec& spec);

} // namespace segre
