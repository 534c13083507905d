#ifndef FP_SPLITTER_HPP
#define FP_SPLITTER_HPP

#include "fp/hodge.hpp"
#include "fp/precision.hpp"
#include "fp/quadratic.hpp"
#include "fp/recognize.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fp {

// Rational-charge vector in the alpha basis with entries in Q(sqrt(d)).
struct Charge {
    long d = 1;
    std::vector<QuadraticNumber> coords;

    bool is_zero() const;
    // scale so the first nonzero coordinate is 1
    Charge normalized() const;
    // the field involution b -> -b, identity when d = 1
    Charge galois_conjugate() const;
    std::vector<Complex> to_complex() const;
    // denominators-cleared representation: integer a/b parts + common denominator
    struct Cleared {
        std::vector<Int> a, b;
        Int den;
    };
    Cleared cleared() const;

    friend bool operator==(const Charge& x, const Charge& y) { return x.coords == y.coords; }
};

// One direct summand of the conjectural splitting: a charge pair (rho+, rho-)
// or a single Hodge-Tate charge, with Deligne-period data when the level's
// period derivative is available.
struct Summand {
    int level = 0;                   // j, 1-based
    std::pair<int, int> hodge_type;  // (n-j+1, j-1) + its conjugate, or the middle type
    std::vector<Charge> basis;
    Complex c_plus, c_minus;
    std::optional<Complex> quotient;
    std::optional<AlgebraicGuess> recognized_quotient;
};

struct SplitReport {
    int n = 0;
    long d = 1;  // field of the irrational summands
    std::vector<Summand> summands;
    std::vector<Real> residuals;  // per summand: worst relative off-level pairing
    int unresolved_dimension = 0;
    std::vector<std::pair<int, int>> unresolved_types;
    std::vector<std::string> notes;
};

struct ChargeVerification {
    Real plane_distance;           // |proj_W rho| / |rho|
    std::array<Real, 3> pairings;  // relative |rho^T M Pi^(k)|, k = 0..2
    bool pass = false;
};

// Field-vector basis of the real 2-plane spanned by Re/Im of Pi^(j-1)(0),
// found by reducing the simultaneous-relation lattice over {e_i, sqrt(d) e_i}.
// nullopt = no split detected at (d, height).
std::optional<std::pair<Charge, Charge>> charge_plane(int n, int j, long d,
                                                      const PeriodVectors& periods,
                                                      const Int& max_height,
                                                      const PrecisionContext& ctx);

// Pairing/vanishing report for a candidate charge at level j.
ChargeVerification verify_charge(const Charge& rho, const PeriodVectors& periods,
                                 const CupMatrix& cup, int j, const PrecisionContext& ctx);

// Sort a plane basis into (rho+, rho-): by F_infinity eigenvalue when the
// involution matrix is known (n = 3, 4), else by the realness criterion
// (pairing real for rho+, purely imaginary for rho-). Output charges are
// normalized, so the result is independent of the input order.
std::pair<Charge, Charge> eigen_sort(const Charge& a, const Charge& b, int n,
                                     const PeriodVectors& periods, const CupMatrix& cup,
                                     const std::optional<std::vector<std::vector<Rational>>>& finfty,
                                     const PrecisionContext& ctx);

// c+- = (2 pi i)^-n Pi^(j-1)^T M rho+-, the quotient c+/c-, and its
// recognized minimal polynomial.
Summand deligne_periods(Summand s, const PeriodVectors& periods, const CupMatrix& cup, int n,
                        const PrecisionContext& ctx);

// (2 pi i)^m c- for odd m, (2 pi i)^m c+ for even m; m in {0, 1, 2, 3}.
Complex tate_twist(const Summand& s, int m);

// Lattice height bound per n, matched to the observed charge denominators.
Int default_height_bound(int n);

// Candidate fields: squarefree kernel extracted from the recognized
// mirror-map minimal polynomial first, then {1, 2, 3, 5, 6, 7}, then the
// user-supplied value.
std::vector<long> field_candidates(int n, const PeriodVectors& periods,
                                   const PrecisionContext& ctx,
                                   std::optional<long> user_d = std::nullopt);

// Full splitting pass: planes at j = 1..min(3, ceil((n+1)/2)), the Hodge-Tate
// singleton for even n when the complement is one-dimensional, and the
// unresolved remainder with its Hodge types.
SplitReport assemble_split(int n, const PeriodVectors& periods, const CupMatrix& cup,
                           const PrecisionContext& ctx,
                           std::optional<long> user_d = std::nullopt,
                           std::optional<Int> max_height = std::nullopt);

// Exploratory search at j = 4 (and j = 5 for n = 10) using higher jet
// derivatives; informational only, absence of findings is a valid result.
struct DeeperSplitFinding {
    int j = 0;
    long d = 1;
    bool found = false;
    std::optional<std::pair<Charge, Charge>> basis;
};
std::vector<DeeperSplitFinding> attempt_deeper_split(int n, const JetPoint& jets,
                                                     const PeriodMatrix& P,
                                                     const std::vector<long>& d_candidates,
                                                     const PrecisionContext& ctx,
                                                     const Int& max_height = Int(100000000));

// JSON rendering with exact coordinates as "num/den" / "num/den*sqrt(d)"
// strings and residuals as decimal exponents.
std::string split_report_json(const SplitReport& r);

}  // namespace fp

#endif
