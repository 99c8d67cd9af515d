#pragma once

#include <ordmotif/context.hh>
#include <ordmotif/partial_map.hh>

#include <optional>

namespace ordmotif
{
    struct MeasureVerdict
    {
        bool is_scale_measure = false;
        bool is_full = false;
        bool is_surjective = false;
        /// An object set of the source context that breaks the checked property:
        /// a preimage that is not an extent, or an extent that is not a preimage.
        std::optional<ObjectSet> witness;
    };

    /// Checks that sigma^-1(m') is an extent of K for every attribute m of S.
    /// Preimages commute with intersection, so this covers all of Ext(S). The
    /// verdict's is_full is filled in as well; the witness only reports a
    /// failed scale-measure check. Throws std::logic_error if sigma is not
    /// total on G_K.
    auto is_scale_measure(const FormalContext & k, const FormalContext & s, const PartialMap & sigma) -> MeasureVerdict;

    /// Additionally requires every extent of K to be a preimage of an extent of
    /// S. Only attribute extents of K need checking, since they include the
    /// meet-irreducibles and preimages are intersection-closed. The witness
    /// reports whichever check failed first.
    auto is_full_scale_measure(const FormalContext & k, const FormalContext & s, const PartialMap & sigma) -> MeasureVerdict;

    /// Local variant: sigma is checked as a map from K[H, M] where H is its
    /// domain. Throws std::invalid_argument for an empty domain. The witness is
    /// expressed over the objects of K.
    auto is_local_scale_measure(const FormalContext & k, const FormalContext & s, const PartialMap & sigma, bool require_full)
        -> MeasureVerdict;

    struct Restriction
    {
        /// S[sigma(H'), M_S].
        FormalContext target;
        /// sigma restricted to H', re-indexed into `target`.
        PartialMap map;
    };

    /// sigma|H' into S[sigma(H'), M_S]. Throws std::logic_error unless H' is a
    /// subset of sigma's domain.
    auto restrict(const FormalContext & s, const PartialMap & sigma, const ObjectSet & subdomain) -> Restriction;
}
