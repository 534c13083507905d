#ifndef FP_TRANSPORT_HPP
#define FP_TRANSPORT_HPP

#include "fp/diffop.hpp"
#include "fp/precision.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fp {

// Values and psi-derivatives of the n+1 components psi^-1 w_j at one point:
// jets[j][k] = d^k/dpsi^k [psi^-1 w_j] at psi.
struct JetPoint {
    Complex psi;
    std::vector<std::vector<Complex>> jets;
};

// Piecewise-linear continuation path; arcs are represented by sampled
// waypoints. clearance is the required minimum distance to the singular set
// {psi : psi^{n+2} = 1}.
struct TransportPath {
    std::vector<Complex> waypoints;
    double clearance = 0.15;
};

struct PathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TransportPrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Jet of psi^-1 w_j at psi0 (|psi0| > 1), derivatives 0..n, obtained by
// term-wise differentiation of the composite series through phi = psi^-(n+2),
// with log(lambda phi) = principal log + 2 pi i * log_branch.
JetPoint initial_jet(int n, const Complex& psi0, long log_branch, const PrecisionContext& ctx);

// Taylor-method continuation of the order-m ODE along the path. Each step is
// bounded by rho * (distance to the nearest singularity); the final JetPoint
// carries derivatives 0..m+4. The start jet must sit at the first waypoint
// and provide at least m derivative orders (0..m-1).
JetPoint transport(const PsiODE& ode, const JetPoint& start, const TransportPath& path,
                   const PrecisionContext& ctx, double rho = 0.5);

// Default continuation data per n: psi0 = -3 throughout; n = 3 continues along
// the straight segment [-3, 0], even n detour around the singular fiber
// psi = -1 with a sampled semicircle of radius 0.2. Detour side and the log
// branch at psi0 are fixed constants chosen to match the reference value
// tables.
TransportPath default_path(int n);
long default_log_branch(int n);

// initial_jet + transport with the defaults for n in {3,4,6,8,10}. If
// cache_dir is nonempty, results are cached on disk keyed by
// (n, digits, path hash).
JetPoint fermat_jets(int n, const PrecisionContext& ctx, const std::string& cache_dir = "");

// Cache format: one JSON header line {"n":..,"digits":..,"branch":..,
// "path":[[re,im],...]}, then jets row-major as "re im" decimal lines.
void save_jets(const JetPoint& p, int n, long branch, const TransportPath& path,
               const PrecisionContext& ctx, std::ostream& os);
std::optional<JetPoint> load_jets(std::istream& is, int n, unsigned digits);
std::string path_cache_key(int n, unsigned digits, const TransportPath& path, long branch);

// Minimum distance from z to the (n+2)-th roots of unity.
Real singular_distance(int n, const Complex& z);

}  // namespace fp

#endif
