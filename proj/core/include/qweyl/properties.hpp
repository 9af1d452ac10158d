#pragma once

#include <cstdint>
#include <random>

#include "qweyl/algebra.hpp"

namespace qweyl {

using Rng = std::mt19937_64;

/// Small nonzero coefficient: an integer in [-3, 3], times a power of q when the field has one.
Scalar random_scalar(const Field& f, Rng& rng);
/// Single PBW monomial with total degree <= max_degree.
Monomial random_monomial(std::size_t n, unsigned max_degree, Rng& rng);
/// Sum of up to max_terms random terms.
PbwElement random_element(const AlgebraSpec& spec, unsigned max_degree, unsigned max_terms, Rng& rng);
/// Word of up to max_length generator factors, with an optional scalar factor.
Word random_word(std::size_t n, unsigned max_length, Rng& rng, const Field& f);

/// Seeded randomized checks of the rewriting engine: associativity on random
/// triples, agreement of normal_form with left- and right-nested products of
/// the same word, and additivity of the grading on monomial products.
CheckReport verify_engine_properties(const AlgebraSpec& spec, unsigned cases, unsigned max_degree,
                                     std::uint64_t seed);

}  // namespace qweyl
