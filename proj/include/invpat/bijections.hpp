#ifndef INVPAT_BIJECTIONS_HPP
#define INVPAT_BIJECTIONS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invpat/core.hpp"
#include "invpat/structures.hpp"

namespace invpat {

/// e_i = #{j < i : pi_j > pi_i}.
InversionSequence theta(std::span<const int> pi);
Permutation theta_inv(std::span<const int> e);

/// I_n(021) -> Schroder paths of size n-1.
SchroderPath rho(std::span<const int> e);
InversionSequence rho_inv(const SchroderPath& p);

/// Schroder paths of size n-1 -> I_n(021), by interpreting the valley word.
InversionSequence phi(const SchroderPath& p);
SchroderPath phi_inv(std::span<const int> e);

/// I_n(011) -> restricted growth functions of length n.
Word kappa(std::span<const int> e);
InversionSequence kappa_inv(std::span<const int> v);

/// I_n(021) -> BW trees with n-1 nodes.
BWTree tau(std::span<const int> e);
InversionSequence tau_inv(const BWTree& t);

/// I_n(210) -> I_n(201). Weak left-to-right maxima stay; every other position
/// takes the largest unused old value below the running maximum.
InversionSequence mu_210_to_201(std::span<const int> e);
/// Same sweep taking the smallest candidate instead.
InversionSequence mu_inv(std::span<const int> f);

/// Parent array of a 0-1-2 increasing tree on {0..n} -> I_n(000).
InversionSequence tree000_to_inv(std::span<const int> parents);
Word inv_to_tree000(std::span<const int> e);

/// theta, rho, phi, kappa, tau, mu, tree000.
const std::vector<std::string>& bijection_names();

/// Applies a bijection to its text form. Sequences, permutations, RGFs and
/// parent arrays are comma separated; paths are step strings; trees use the
/// BWTree grammar. Throws std::invalid_argument on bad names or input.
std::string apply_bijection(std::string_view name, bool forward, std::string_view input);

} // namespace invpat

#endif // INVPAT_BIJECTIONS_HPP
