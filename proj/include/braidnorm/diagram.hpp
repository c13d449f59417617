#pragma once

#include "braidnorm/braid.hpp"

#include <vector>

namespace braidnorm {

/// One crossing of the closed-braid diagram, band letters already expanded.
/// Strands are identified by their 0-based top position.
struct Crossing {
    int over = 0;
    int under = 0;
    int sign = 1;
};

/// Crossings in word order. In s_k^{+1} the strand entering at position k
/// passes over; in s_k^{-1} the strand entering at position k+1 does.
std::vector<Crossing> crossings(const BraidWord& word);

/// Component data of the closure. Components are numbered 0..r-1 in order of
/// their smallest strand.
struct ClosureProfile {
    int r = 0;
    std::vector<int> comp;               ///< strand (0-based top position) -> component
    std::vector<std::vector<int>> cr;    ///< signed crossing counts, symmetric
    std::vector<int> l_u;                ///< unsigned self-crossings per component
    std::vector<int> u;                  ///< crossings with this component over another one
    std::vector<int> n_i;                ///< strands per component
    std::vector<std::vector<int>> strands; ///< strands of each component, ascending
};

ClosureProfile closure_profile(const BraidWord& word);

/// lk[i][j] = cr[i][j] / 2 off the diagonal, 0 on it. Throws InternalError if
/// an off-diagonal crossing count is odd.
std::vector<std::vector<int>> linking_matrix(const ClosureProfile& profile);

enum class SurfaceKind : unsigned char { seifert, band_seifert, punctured_component };

/// Euler characteristic of a surface built from the diagram. chi_minus sums
/// max(-chi, 0) over connected pieces, so chi_minus >= max(-chi, 0).
struct EulerReport {
    long long chi = 0;
    long long chi_minus = 0;
    SurfaceKind kind = SurfaceKind::seifert;
};

/// Seifert's surface of the standard diagram: n disks, one band per crossing.
EulerReport seifert_euler(const BraidWord& word);

/// Band surface: n disks, one band per (unexpanded) letter.
EulerReport band_seifert_euler(const BraidWord& word);

/// Surface spanning component j pierced by the others: chi = n_j - u_j - l_j.
EulerReport punctured_component_euler(const BraidWord& word, int j);

/// Generalized Seifert surface spanning the components with in_sublink[c]
/// set, pierced wherever one of them crosses over another component.
EulerReport sublink_euler(const BraidWord& word, const std::vector<bool>& in_sublink);

const char* to_string(SurfaceKind kind) noexcept;

} // namespace braidnorm
