#ifndef SYMINT_ATOMS_HPP
#define SYMINT_ATOMS_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "symint/rational.hpp"

namespace symint {

// Atoms are the leaves of the expression algebra: independent variables,
// opaque parameters, jet variables (a function symbol together with a
// derivative multi-index over its declared arguments), and "special" symbols
// whose derivatives are supplied by the caller (used by dedicated evaluators).
enum class atom_kind : unsigned char { indep, param, jet, special };

struct atom_info {
    atom_kind kind;
    std::string name;         // symbol name, or function name for jets
    std::vector<int> args;    // jet only: atom ids of the function arguments
    std::vector<int> mindex;  // jet only: multiplicities, parallel to args
    int order = 0;            // jet only: sum of mindex
    int func = -1;            // jet only: atom id of the 0-jet of the same function
};

// Process-wide interning table. Atom ids are dense and stable for the
// lifetime of the process; info() references stay valid forever.
class symtab {
public:
    static symtab& instance() {
        static symtab tab;
        return tab;
    }

    int indep(const std::string& name) { return intern(atom_kind::indep, name, {}, {}); }
    int param(const std::string& name) { return intern(atom_kind::param, name, {}, {}); }
    int special(const std::string& name) { return intern(atom_kind::special, name, {}, {}); }

    // Declares (or retrieves) a function symbol over the given argument atoms
    // and returns its 0-jet atom.
    int function(const std::string& name, const std::vector<int>& args) {
        return intern(atom_kind::jet, name, args, std::vector<int>(args.size(), 0));
    }

    // The jet of a function with the given multi-index (parallel to args).
    int jet(int func0, const std::vector<int>& mindex) {
        const atom_info& f = info(func0);
        if (f.kind != atom_kind::jet || f.order != 0)
            throw domain_error("jet() expects a function 0-jet atom");
        return intern(atom_kind::jet, f.name, f.args, mindex);
    }

    // Jet with one extra derivative with respect to args[arg_pos].
    int jet_raise(int jet_atom, int arg_pos) {
        const atom_info& a = info(jet_atom);
        std::vector<int> m = a.mindex;
        m.at(arg_pos) += 1;
        return intern(atom_kind::jet, a.name, a.args, m);
    }

    const atom_info& info(int id) const { return *table_.at(id); }

    bool exists(atom_kind kind, const std::string& name) const {
        std::lock_guard<std::mutex> lock(mu_);
        return index_.count(key(kind, name, {}, {})) > 0;
    }

private:
    using key_t = std::tuple<int, std::string, std::vector<int>, std::vector<int>>;

    static key_t key(atom_kind k, const std::string& n, const std::vector<int>& a,
                     const std::vector<int>& m) {
        return {static_cast<int>(k), n, a, m};
    }

    int intern(atom_kind k, const std::string& n, const std::vector<int>& args,
               const std::vector<int>& mindex) {
        std::lock_guard<std::mutex> lock(mu_);
        key_t kk = key(k, n, args, mindex);
        auto it = index_.find(kk);
        if (it != index_.end()) return it->second;
        auto* ai = new atom_info{k, n, args, mindex, 0, -1};
        for (int v : mindex) ai->order += v;
        int id = static_cast<int>(table_.size());
        table_.push_back(ai);
        index_.emplace(std::move(kk), id);
        if (k == atom_kind::jet) {
            if (ai->order == 0) {
                ai->func = id;
            } else {
                key_t fk = key(k, n, args, std::vector<int>(args.size(), 0));
                auto fit = index_.find(fk);
                if (fit == index_.end()) {
                    auto* fi = new atom_info{k, n, args, std::vector<int>(args.size(), 0), 0, -1};
                    int fid = static_cast<int>(table_.size());
                    fi->func = fid;
                    table_.push_back(fi);
                    index_.emplace(std::move(fk), fid);
                    ai->func = fid;
                } else {
                    ai->func = fit->second;
                }
            }
        }
        return id;
    }

    mutable std::mutex mu_;
    std::vector<atom_info*> table_;  // leaked on purpose: atoms live forever
    std::map<key_t, int> index_;
};

inline const atom_info& atom(int id) { return symtab::instance().info(id); }
inline bool is_jet(int id) { return atom(id).kind == atom_kind::jet; }
inline bool is_jet_of(int id, int func0) {
    const atom_info& a = atom(id);
    return a.kind == atom_kind::jet && a.func == func0;
}

}  // namespace symint

#endif
