#pragma once

// Property checks over exhaustive or randomized word universes. Each check
// returns the number of cases examined and the first counterexample found.
// The unit tests run them on small universes; the acceptance suite runs them
// at full size.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace props {

struct Report {
    std::size_t cases = 0;
    std::optional<std::string> failure;

    bool ok() const { return !failure.has_value(); }
    void fail(std::string message) {
        if (!failure) failure = std::move(message);
    }
};

/// Word universe: every word of length <= max_len over the first sigma
/// letters, for each sigma in [1, max_sigma].
struct Universe {
    std::size_t max_sigma = 3;
    std::size_t max_len = 8;
};

// core
Report greedy_embedding(Universe u, std::size_t max_factor_len);
Report lcsf_against_oracle(Universe u, std::size_t max_factor_len);
Report jumble_index_duality_and_spectrum(Universe u, std::size_t max_factor_len);
Report short_and_unary_words(Universe u, std::size_t max_factor_len);
Report mutual_symmetry(Universe u);
Report superadditivity(Universe u, std::size_t max_factor_len);
Report concatenation_bounds(Universe u);
Report one_letter_extension(Universe u, std::size_t max_factor_len);
Report arch_invariants(Universe u);

// enumerate
Report set_builders_against_oracle(Universe u, std::size_t max_k);
Report inclusion_and_emptiness(Universe u, std::size_t max_k);

// simon
Report equivalence_against_oracle(Universe u, std::size_t max_k);
Report downward_monotonicity(Universe u, std::size_t max_k);
Report length_k_sufficiency(Universe u, std::size_t max_k);
Report parikh_criterion(std::size_t max_sigma, std::size_t max_len, std::size_t max_k);
Report pumping_soundness(Universe u, std::size_t max_k, std::size_t iterations);
Report same_alphabet_obstruction(Universe u, std::size_t max_k);
Report equivalence_axioms(std::size_t samples, std::uint32_t seed);

// universality
Report coverage_bound_progress_growth(Universe u);
Report potential_additivity(std::size_t samples, std::uint32_t seed);
Report one_jumble_and_relocation(std::size_t instances, std::size_t max_len, std::uint32_t seed);

}  // namespace props
