#include "rydgate/hilbert.hpp"

#include <algorithm>

namespace rydgate {

int LevelScheme::level(const std::string& name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name) return static_cast<int>(i);
    throw DomainError("unknown level name: " + name);
}

const LevelScheme& LevelScheme::control() {
    static const LevelScheme s{AtomRole::Control, {"0", "1", "r"}, {'0', '1', 'r'}, 0, 1};
    return s;
}

const LevelScheme& LevelScheme::target() {
    static const LevelScheme s{AtomRole::Target, {"A", "B", "e", "R"}, {'A', 'B', 'e', 'R'}, 0, 1};
    return s;
}

int SystemLayout::dim() const {
    int d = 1;
    for (const auto& a : atoms) d *= a.dim();
    return d;
}

int SystemLayout::qubit_dim() const { return 1 << n_atoms(); }

int SystemLayout::index_of(const std::vector<int>& levels) const {
    if (static_cast<int>(levels.size()) != n_atoms())
        throw DomainError("index_of: wrong number of levels");
    int idx = 0;
    for (int k = 0; k < n_atoms(); ++k) {
        if (levels[k] < 0 || levels[k] >= atoms[k].dim())
            throw DomainError("index_of: level out of range");
        idx = idx * atoms[k].dim() + levels[k];
    }
    return idx;
}

std::vector<int> SystemLayout::levels_of(int index) const {
    std::vector<int> lv(n_atoms());
    for (int k = n_atoms() - 1; k >= 0; --k) {
        lv[k] = index % atoms[k].dim();
        index /= atoms[k].dim();
    }
    return lv;
}

int SystemLayout::index_of_label(const std::string& label) const {
    if (static_cast<int>(label.size()) != n_atoms())
        throw DomainError("state label '" + label + "' has wrong length for layout");
    std::vector<int> lv(n_atoms());
    for (int k = 0; k < n_atoms(); ++k) {
        const auto& chars = atoms[k].chars;
        auto it = std::find(chars.begin(), chars.end(), label[k]);
        if (it == chars.end())
            throw DomainError("state label '" + label + "' has invalid character for atom " +
                              std::to_string(k));
        lv[k] = static_cast<int>(it - chars.begin());
    }
    return index_of(lv);
}

std::string SystemLayout::label_of(int index) const {
    const auto lv = levels_of(index);
    std::string s;
    for (int k = 0; k < n_atoms(); ++k) s.push_back(atoms[k].chars[lv[k]]);
    return s;
}

std::vector<std::string> SystemLayout::all_labels() const {
    std::vector<std::string> out;
    out.reserve(dim());
    for (int i = 0; i < dim(); ++i) out.push_back(label_of(i));
    return out;
}

int SystemLayout::comp_index(int bits) const {
    std::vector<int> lv(n_atoms());
    for (int k = 0; k < n_atoms(); ++k) {
        const int bit = (bits >> (n_atoms() - 1 - k)) & 1;
        lv[k] = bit ? atoms[k].qubit1 : atoms[k].qubit0;
    }
    return index_of(lv);
}

std::vector<int> SystemLayout::comp_indices() const {
    std::vector<int> out(qubit_dim());
    for (int b = 0; b < qubit_dim(); ++b) out[b] = comp_index(b);
    return out;
}

SystemLayout make_layout(int n_controls) {
    if (n_controls < 1) throw DomainError("make_layout: need at least one control atom");
    SystemLayout layout;
    for (int i = 0; i < n_controls; ++i) layout.atoms.push_back(LevelScheme::control());
    layout.atoms.push_back(LevelScheme::target());
    return layout;
}

ComplexMatrix embed(const SystemLayout& layout, const std::vector<LocalOperator>& ops) {
    std::vector<const ComplexMatrix*> per_atom(layout.n_atoms(), nullptr);
    for (const auto& op : ops) {
        if (op.atom_index < 0 || op.atom_index >= layout.n_atoms())
            throw DomainError("embed: atom index out of range");
        if (per_atom[op.atom_index])
            throw DomainError("embed: duplicate atom index " + std::to_string(op.atom_index));
        const int d = layout.atoms[op.atom_index].dim();
        if (op.matrix.rows != d || op.matrix.cols != d)
            throw ShapeError("embed: local operator dimension mismatch");
        per_atom[op.atom_index] = &op.matrix;
    }
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (int k = 0; k < layout.n_atoms(); ++k) {
        const ComplexMatrix local =
            per_atom[k] ? *per_atom[k] : ComplexMatrix::identity(layout.atoms[k].dim());
        out = kron(out, local);
    }
    return out;
}

ComplexMatrix computational_projector(const SystemLayout& layout) {
    ComplexMatrix p(layout.dim(), layout.dim());
    for (int idx : layout.comp_indices()) p(idx, idx) = 1.0;
    return p;
}

std::vector<ComplexMatrix> embedded_pauli_basis(const SystemLayout& layout) {
    const int n = layout.n_atoms();
    // Local Paulis on the qubit levels, zero elsewhere.
    std::vector<std::vector<ComplexMatrix>> local(n);
    for (int k = 0; k < n; ++k) {
        const auto& scheme = layout.atoms[k];
        const int d = scheme.dim();
        const int q0 = scheme.qubit0, q1 = scheme.qubit1;
        ComplexMatrix id(d, d), sx(d, d), sy(d, d), sz(d, d);
        id(q0, q0) = 1.0; id(q1, q1) = 1.0;
        sx(q0, q1) = 1.0; sx(q1, q0) = 1.0;
        sy(q0, q1) = cplx{0, -1}; sy(q1, q0) = cplx{0, 1};
        sz(q0, q0) = 1.0; sz(q1, q1) = -1.0;
        local[k] = {id, sx, sy, sz};
    }
    const int count = 1 << (2 * n);  // 4^n
    std::vector<ComplexMatrix> basis;
    basis.reserve(count);
    for (int j = 0; j < count; ++j) {
        ComplexMatrix op = ComplexMatrix::identity(1);
        for (int k = 0; k < n; ++k) {
            const int digit = (j >> (2 * (n - 1 - k))) & 3;
            op = kron(op, local[k][digit]);
        }
        basis.push_back(std::move(op));
    }
    return basis;
}

ComplexMatrix level_ket_bra(const LevelScheme& s, int upper, int lower) {
    ComplexMatrix m(s.dim(), s.dim());
    m(upper, lower) = 1.0;
    return m;
}

ComplexMatrix level_projector(const LevelScheme& s, int level) {
    return level_ket_bra(s, level, level);
}

}  // namespace rydgate
