#pragma once

#include <optional>
#include <string>

#include "delone/rational.hpp"
#include "delone/set_algebra.hpp"

namespace delone {

/// How a reported number relates to the quantity it estimates.
enum class Cert {
    Exact,         // equals the true value
    SampledLower,  // a finite sample of a sup: the true value is at least this
    SampledUpper,  // a finite sample of an inf: the true value is at most this
    Estimate,      // finite-index or finite-family value without a one-sided guarantee
};

inline const char* to_string(Cert c) {
    switch (c) {
        case Cert::Exact: return "exact";
        case Cert::SampledLower: return "sampled-lower-bound";
        case Cert::SampledUpper: return "sampled-upper-bound";
        case Cert::Estimate: return "estimate";
    }
    return "?";
}

/// Translation-boundedness constants: ν(B_u² x) ≤ C_u and ν(B_l x) ≥ C_l for every x.
struct TBWitness {
    GSet b_upper;
    Rational c_upper = 0;
    std::optional<GSet> b_lower;        // absent when ν has no positive lower bound (e.g. ν = 0)
    std::optional<Rational> c_lower;
    Cert upper_cert = Cert::SampledLower;
    Cert lower_cert = Cert::SampledUpper;
    std::string note;

    bool has_lower() const { return c_lower.has_value() && *c_lower > 0; }
};

}  // namespace delone
