#pragma once

// Level schemes, composite-space construction and embeddings.
//
// Conventions (fixed; tests depend on them):
//   - Tensor order = atom list order: controls first, target last, first atom
//     most significant in the composite index.
//   - Control levels: 0:|0>, 1:|1>, 2:|r>  (chars '0','1','r')
//   - Target levels:  0:|A>, 1:|B>, 2:|e>, 3:|R>  (chars 'A','B','e','R')
//   - Qubit mapping: control |0>->level 0, |1>->level 1; target |0>->A, |1>->B.
//   - Pauli basis order: index j in base 4, digits (I,X,Y,Z), first atom is
//     the most significant digit.

#include <string>
#include <vector>

#include "rydgate/linalg.hpp"

namespace rydgate {

enum class AtomRole { Control, Target };

struct LevelScheme {
    AtomRole role;
    std::vector<std::string> labels;   // level names, index order
    std::vector<char> chars;           // one-char labels for state strings
    int qubit0 = 0;                    // level housing computational |0>
    int qubit1 = 1;                    // level housing computational |1>

    int dim() const { return static_cast<int>(labels.size()); }
    int level(const std::string& name) const;  // throws DomainError if unknown

    static const LevelScheme& control();
    static const LevelScheme& target();
};

struct SystemLayout {
    std::vector<LevelScheme> atoms;  // exactly one Target, listed last

    int n_atoms() const { return static_cast<int>(atoms.size()); }
    int n_controls() const { return n_atoms() - 1; }
    int target_index() const { return n_atoms() - 1; }
    int dim() const;
    int qubit_dim() const;  // 2^n_atoms

    // Composite index <-> per-atom level indices / label strings ("11A").
    int index_of(const std::vector<int>& levels) const;
    std::vector<int> levels_of(int index) const;
    int index_of_label(const std::string& label) const;
    std::string label_of(int index) const;
    std::vector<std::string> all_labels() const;

    // Computational-subspace indexing: qubit bitstring (first atom most
    // significant) -> composite index.
    int comp_index(int bits) const;
    std::vector<int> comp_indices() const;  // 2^N entries, bit order
};

// Layout with n controls and one target.
SystemLayout make_layout(int n_controls);

struct LocalOperator {
    int atom_index;
    ComplexMatrix matrix;
};

// Kronecker embedding with identity on unlisted atoms, in layout order.
// At most one operator per atom; duplicate indices or local-dimension
// mismatches throw.
ComplexMatrix embed(const SystemLayout& layout, const std::vector<LocalOperator>& ops);

// Orthogonal projector onto the span of per-atom qubit levels (rank 2^N).
ComplexMatrix computational_projector(const SystemLayout& layout);

// All 4^N tensor products of {I, sx, sy, sz} on the per-atom qubit levels,
// embedded into the full space (zero outside the computational subspace).
std::vector<ComplexMatrix> embedded_pauli_basis(const SystemLayout& layout);

// Local helpers used across modules.
ComplexMatrix level_ket_bra(const LevelScheme& s, int upper, int lower);  // |upper><lower|
ComplexMatrix level_projector(const LevelScheme& s, int level);           // |level><level|

}  // namespace rydgate
