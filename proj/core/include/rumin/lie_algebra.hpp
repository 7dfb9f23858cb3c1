#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rumin/scalar.hpp"

namespace rumin {

// Sparse vector over the algebra basis, keyed by 0-based index.
using SparseVec = std::map<int, Scalar>;
// Brackets [X_i, X_j] for i < j (0-based).
using BracketTable = std::map<std::pair<int, int>, SparseVec>;

// A stratified nilpotent Lie algebra g = V_1 + ... + V_k given by exact
// structure constants in a basis adapted to the layers. Indices are 0-based
// in the API; text and JSON formats use 1-based indices.
class StratifiedLieAlgebra {
public:
    // Validates range, grading, Jacobi and stratification, in that order,
    // throwing the first violation found.
    static StratifiedLieAlgebra from_structure_constants(const BracketTable& table, std::vector<int> layer_dims,
                                                         std::vector<std::string> labels = {});

    int dim() const { return n_; }
    int step() const { return static_cast<int>(layer_dims_.size()); }
    const std::vector<int>& layer_dims() const { return layer_dims_; }
    const std::vector<int>& weights() const { return weights_; }
    int weight(int i) const { return weights_.at(i); }
    int homogeneous_dimension() const;
    // Basis indices of layer l (1-based layer number).
    std::vector<int> layer(int l) const;
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    const BracketTable& table() const { return table_; }
    // [X_i, X_j] for any pair of basis indices.
    SparseVec bracket_basis(int i, int j) const;
    // Bilinear bracket of dense vectors of length dim().
    std::vector<Scalar> bracket(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
    // Structure constant c^k_{ij} with [X_i, X_j] = sum_k c^k_{ij} X_k.
    Scalar structure_constant(int i, int j, int k) const;

    friend bool operator==(const StratifiedLieAlgebra& a, const StratifiedLieAlgebra& b) {
        return a.n_ == b.n_ && a.layer_dims_ == b.layer_dims_ && a.table_ == b.table_;
    }

private:
    int n_ = 0;
    std::vector<int> layer_dims_;
    std::vector<int> weights_;
    std::vector<std::string> labels_;
    BracketTable table_;
};

StratifiedLieAlgebra cartan_group();
bool is_cartan(const StratifiedLieAlgebra& g);

// Free nilpotent Lie algebra on m generators of step k via a Hall basis.
//
// Hall rule: basic commutators are listed by degree, and within a degree in
// order of creation, scanning u then v in ascending basis order. A bracket
// [u, v] of lower basic elements is basic iff u < v and, when v = [v1, v2]
// itself, v1 <= u. For (2,3) this gives X3=[X1,X2], X4=[X1,X3], X5=[X2,X3].
StratifiedLieAlgebra free_nilpotent(int generators, int step, int max_dim = 64);

// For each element of free_nilpotent(m, k), the Hall word as a nested
// bracket string like "[X1,[X1,X2]]".
std::vector<std::string> hall_words(int generators, int step, int max_dim = 64);

// Witt dimension formula for the degree-d layer of the free Lie algebra.
long free_layer_dim(int generators, int degree);

}  // namespace rumin
