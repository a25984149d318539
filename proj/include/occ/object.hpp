#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace occ {

/// Atoms of the open-closed cobordism category: the monoidal unit I, the
/// open-string object A and the closed-string object C.
enum class Atom : unsigned char { I, A, C };

inline char atom_char(Atom a) {
    switch (a) {
        case Atom::I: return 'I';
        case Atom::A: return 'A';
        case Atom::C: return 'C';
    }
    return '?';
}

/// A parenthesized tensor word over {I, A, C}. Immutable binary tree with
/// structural sharing; structural equality (parenthesization matters).
class ObjectExpr {
public:
    ObjectExpr() : ObjectExpr(Atom::I) {}
    explicit ObjectExpr(Atom a) : node_(std::make_shared<Node>(a)) {}

    static ObjectExpr unit() { return ObjectExpr(Atom::I); }
    static ObjectExpr atom(Atom a) { return ObjectExpr(a); }

    friend ObjectExpr tensor(const ObjectExpr& l, const ObjectExpr& r) {
        ObjectExpr e;
        e.node_ = std::make_shared<Node>(l.node_, r.node_);
        return e;
    }

    bool is_atom() const { return node_->left == nullptr; }
    Atom atom_value() const {
        if (!is_atom()) throw std::logic_error("ObjectExpr: not an atom");
        return node_->atom;
    }
    ObjectExpr left() const {
        ObjectExpr e;
        e.node_ = node_->left;
        return e;
    }
    ObjectExpr right() const {
        ObjectExpr e;
        e.node_ = node_->right;
        return e;
    }

    friend bool operator==(const ObjectExpr& a, const ObjectExpr& b) {
        return eq(a.node_.get(), b.node_.get());
    }
    friend bool operator!=(const ObjectExpr& a, const ObjectExpr& b) { return !(a == b); }

    /// Leaves left to right, I leaves included.
    void leaves(std::vector<Atom>& out) const {
        if (is_atom())
            out.push_back(node_->atom);
        else {
            left().leaves(out);
            right().leaves(out);
        }
    }

    /// Atom sequence with unit leaves removed; the strictification of the word.
    std::vector<Atom> strict_atoms() const {
        std::vector<Atom> all, out;
        leaves(all);
        for (Atom a : all)
            if (a != Atom::I) out.push_back(a);
        return out;
    }

    std::size_t size() const { return count(node_.get()); }

    std::string str() const {
        std::string s;
        print(node_.get(), s, false);
        return s;
    }

    /// Right-associated tensor of a strict atom list; empty list is I.
    static ObjectExpr from_atoms(const std::vector<Atom>& atoms) {
        if (atoms.empty()) return unit();
        ObjectExpr e(atoms.back());
        for (std::size_t i = atoms.size() - 1; i-- > 0;)
            e = tensor(ObjectExpr(atoms[i]), e);
        return e;
    }

private:
    struct Node {
        explicit Node(Atom a) : atom(a) {}
        Node(std::shared_ptr<const Node> l, std::shared_ptr<const Node> r)
            : atom(Atom::I), left(std::move(l)), right(std::move(r)) {}
        Atom atom;
        std::shared_ptr<const Node> left, right;
    };

    static bool eq(const Node* a, const Node* b) {
        if (a == b) return true;
        if ((a->left == nullptr) != (b->left == nullptr)) return false;
        if (a->left == nullptr) return a->atom == b->atom;
        return eq(a->left.get(), b->left.get()) && eq(a->right.get(), b->right.get());
    }

    static std::size_t count(const Node* n) {
        if (n->left == nullptr) return 1;
        return 1 + count(n->left.get()) + count(n->right.get());
    }

    static void print(const Node* n, std::string& out, bool parens) {
        if (n->left == nullptr) {
            out += atom_char(n->atom);
            return;
        }
        if (parens) out += '(';
        print(n->left.get(), out, n->left->left != nullptr);
        out += '*';
        print(n->right.get(), out, n->right->left != nullptr);
        if (parens) out += ')';
    }

    std::shared_ptr<const Node> node_;
};

inline ObjectExpr obj_I() { return ObjectExpr::atom(Atom::I); }
inline ObjectExpr obj_A() { return ObjectExpr::atom(Atom::A); }
inline ObjectExpr obj_C() { return ObjectExpr::atom(Atom::C); }

} // namespace occ
