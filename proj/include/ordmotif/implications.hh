#pragma once

#include <ordmotif/context.hh>
#include <ordmotif/partial_map.hh>

#include <cstddef>
#include <vector>

namespace ordmotif
{
    /// An object implication premise -> conclusion.
    struct Implication
    {
        ObjectSet premise;
        ObjectSet conclusion;

        friend auto operator==(const Implication &, const Implication &) -> bool = default;
    };

    /// A duplicate-free set of implications over one object universe.
    class ImplicationTheory
    {
    public:
        ImplicationTheory() = default;
        explicit ImplicationTheory(std::size_t universe) : _universe(universe) {}

        auto universe() const -> std::size_t { return _universe; }
        auto size() const -> std::size_t { return _implications.size(); }
        auto empty() const -> bool { return _implications.empty(); }
        auto implications() const -> const std::vector<Implication> & { return _implications; }

        auto begin() const { return _implications.begin(); }
        auto end() const { return _implications.end(); }

        /// Returns false if the implication was already present.
        auto add(Implication imp) -> bool;

    private:
        std::size_t _universe = 0;
        std::vector<Implication> _implications;
    };

    /// Smallest superset of `a` respecting every implication (forward chaining).
    auto theory_closure(const ImplicationTheory & t, ObjectSet a) -> ObjectSet;

    auto entails(const ImplicationTheory & t, const Implication & imp) -> bool;
    /// t entails every implication of `other`.
    auto entails(const ImplicationTheory & t, const ImplicationTheory & other) -> bool;

    /// The canonical base of the object implications valid in K: one
    /// implication P -> P'' per pseudo-closed object set P.
    auto theory_base(const FormalContext & k) -> ImplicationTheory;

    /// Element-wise preimage: sigma^-1(A) -> sigma^-1(B) for every A -> B of t.
    /// t must live on sigma's target universe.
    auto preimage_theory(const PartialMap & sigma, const ImplicationTheory & t) -> ImplicationTheory;

    struct ImplicationVerdict
    {
        bool is_scale_measure = false;
        bool is_full = false;
    };

    /// Recognizes (full) scale-measures by comparing implication theories:
    /// sigma is a scale-measure iff the pulled-back scale theory entails the
    /// base of K, and full iff the two are equivalent.
    ///
    /// The pulled-back theory is built from the base of S restricted to
    /// sigma's image, and is extended with {g} -> sigma^-1(sigma(g)) for each
    /// object. Without these the models of the pulled-back theory include sets
    /// that split a fibre of sigma, and the equivalence breaks for
    /// non-injective or non-surjective maps. Throws std::logic_error if sigma
    /// is not total.
    auto is_scale_measure_by_implications(const FormalContext & k, const FormalContext & s, const PartialMap & sigma)
        -> ImplicationVerdict;
}
