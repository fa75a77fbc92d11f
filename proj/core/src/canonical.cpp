#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ycluster/errors.hpp"
#include "ycluster/quiver.hpp"

// Canonical labeling: colour refinement by weighted neighbourhood signatures,
// then individualization of each vertex of the first smallest non-trivial
// cell, keeping the lexicographically least adjacency string over all leaves.

namespace ycluster {

namespace {

using Coloring = std::vector<int>;

class Canonizer {
public:
    explicit Canonizer(const ExchangeMatrix& b) : b_(b), n_(b.size()) {}

    std::string run() {
        search(Coloring(n_, 0));
        return best_;
    }

private:
    // Colour ids after refinement are ranks of sorted signatures, so they do
    // not depend on the input vertex order.
    Coloring refine(Coloring c) const {
        int classes = count(c);
        while (true) {
            using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
            std::vector<Sig> sig(n_);
            for (std::size_t v = 0; v < n_; ++v) {
                sig[v].first = c[v];
                for (std::size_t w = 0; w < n_; ++w)
                    if (b_(v, w) != 0) sig[v].second.emplace_back(c[w], b_(v, w));
                std::sort(sig[v].second.begin(), sig[v].second.end());
            }
            std::vector<Sig> uniq = sig;
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            Coloring next(n_);
            for (std::size_t v = 0; v < n_; ++v)
                next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
            int k = static_cast<int>(uniq.size());
            c = std::move(next);
            if (k == classes) return c;
            classes = k;
        }
    }

    static int count(const Coloring& c) {
        Coloring s = c;
        std::sort(s.begin(), s.end());
        return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
    }

    std::string leaf(const Coloring& c) const {
        std::vector<std::size_t> order(n_);
        for (std::size_t v = 0; v < n_; ++v) order[static_cast<std::size_t>(c[v])] = v;
        std::string s;
        s.reserve(2 + n_ * n_);
        s.push_back(static_cast<char>(n_ >> 8));
        s.push_back(static_cast<char>(n_ & 0xff));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                int v = b_(order[i], order[j]);
                if (v < -127 || v > 127) throw DomainError("arrow multiplicity too large for canonical form");
                s.push_back(static_cast<char>(v + 128));
            }
        return s;
    }

    void search(Coloring c) {
        c = refine(std::move(c));
        if (count(c) == static_cast<int>(n_)) {
            std::string s = leaf(c);
            if (!have_ || s < best_) {
                best_ = std::move(s);
                have_ = true;
            }
            return;
        }
        std::map<int, std::vector<std::size_t>> cells;
        for (std::size_t v = 0; v < n_; ++v) cells[c[v]].push_back(v);
        const std::vector<std::size_t>* target = nullptr;
        for (const auto& kv : cells)
            if (kv.second.size() > 1 && (!target || kv.second.size() < target->size())) target = &kv.second;
        for (std::size_t pick : *target) {
            Coloring d(n_);
            for (std::size_t v = 0; v < n_; ++v) d[v] = 2 * c[v] + (v == pick ? 0 : 1);
            search(std::move(d));
        }
    }

    const ExchangeMatrix& b_;
    std::size_t n_;
    std::string best_;
    bool have_ = false;
};

}  // namespace

std::string canonical_form(const ExchangeMatrix& b) {
    if (b.size() == 0) return std::string(2, '\0');
    return Canonizer(b).run();
}

}  // namespace ycluster
