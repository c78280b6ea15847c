#pragma once

#include <stdexcept>
#include <string>

namespace bellfowler {

// Base class for all domain errors raised by the library. The CLI maps these
// to exit code 1; anything else escaping is a bug.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument values (negative factorial argument, U <= 1 in the Gibbs
// map, non-integer K*U, ...).
struct DomainError : Error {
    using Error::Error;
};

// Bell polynomial indices outside 1 <= k <= n (except the represented B_{0,0}).
struct InfeasibleIndex : Error {
    using Error::Error;
};

// A finite coefficient/degeneracy list was asked for a term beyond its length.
struct InsufficientSequence : Error {
    using Error::Error;
};

// Series composition requires the inner series to vanish at the origin.
struct NonzeroConstantTerm : Error {
    using Error::Error;
};

// Gamma = 0: no feasible configuration has positive weight, the occupation
// distribution is undefined.
struct EmptyEnsemble : Error {
    using Error::Error;
};

// Level index outside [1, N-K+1] where a closed form demands it.
struct OutOfRange : Error {
    using Error::Error;
};

// Saddle search could not bracket a root of z g'(z)/g(z) = U.
struct NoBracket : Error {
    using Error::Error;
};

// Generating function evaluated at or beyond its radius of convergence.
struct DivergentPoint : Error {
    using Error::Error;
};

// The brute-force enumerator refuses instances with N beyond its hard cap.
struct EnumerationLimit : Error {
    using Error::Error;
};

} // namespace bellfowler
