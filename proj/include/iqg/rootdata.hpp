#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iqg {

using IntVec = Eigen::VectorXi;
using IntMat = Eigen::MatrixXi;

struct Error : std::runtime_error {
    std::string code;
    Error(std::string code_, const std::string& what_)
        : std::runtime_error(code_ + ": " + what_), code(std::move(code_)) {}
};

enum class DynkinType { A, D, E };

char type_letter(DynkinType t);
DynkinType type_from_letter(char c);

// A Dynkin quiver together with an involutive diagram automorphism.
// Vertices are 0-based internally; the JSON interface is 1-based.
struct IQuiver {
    DynkinType type{DynkinType::A};
    int rank{0};
    std::vector<std::pair<int, int>> arrows;  // (source, target)
    std::vector<int> rho;                     // involution on vertices

    bool split() const {
        for (int i = 0; i < rank; ++i)
            if (rho[i] != i) return false;
        return true;
    }
    int arrows_between(int i, int j) const {  // directed i -> j
        int n = 0;
        for (auto& [a, b] : arrows)
            if (a == i && b == j) ++n;
        return n;
    }
};

// Validated constructor.  Throws Error with code NOT_DYNKIN,
// CYCLIC_ORIENTATION or INVALID_INVOLUTION.
IQuiver make_iquiver(DynkinType type, int rank, std::vector<std::pair<int, int>> arrows,
                     std::vector<int> rho);

// The undirected edge set of the Dynkin diagram (Bourbaki numbering, 0-based).
std::vector<std::pair<int, int>> dynkin_edges(DynkinType type, int rank);

int coxeter_number(DynkinType type, int rank);
int positive_root_count(DynkinType type, int rank);

IntMat cartan_matrix(DynkinType type, int rank);

// All positive roots, obtained by closing the simples under simple
// reflections; sorted lexicographically for stable indexing.
std::vector<IntVec> positive_roots(const IQuiver& q);

// <x,y> = sum_i x_i y_i - sum_{arrows i->j} x_i y_j
long euler_form(const IQuiver& q, const IntVec& x, const IntVec& y);
// <x,y>_a = <x,y> - <y,x>
long antisym_form(const IQuiver& q, const IntVec& x, const IntVec& y);
// (x,y) = <x,y> + <y,x>
long sym_form(const IQuiver& q, const IntVec& x, const IntVec& y);

IntVec apply_rho(const IQuiver& q, const IntVec& x);

IntVec unit_vec(int n, int i);

// All involutive diagram automorphisms compatible with the orientation
// (always contains the identity).
std::vector<std::vector<int>> admissible_involutions(DynkinType type, int rank,
                                                     const std::vector<std::pair<int, int>>& arrows);

}  // namespace iqg
