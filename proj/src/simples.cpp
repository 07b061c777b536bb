#include "lpa/simples.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

struct Decision {
    bool is_new = false;
    std::size_t new_index = 0;
    std::vector<std::uint64_t> coeffs;  // over the basis vectors at the target vertex existing at that time
    std::vector<std::size_t> over;      // their indices
};

class Spinner {
public:
    Spinner(const QuiverPtr& e, const Field& f, std::size_t dmax, VertexIndex start)
        : e_(e), f_(f), p_(f.characteristic()), dmax_(dmax), start_(start) {
        for (ArrowIndex a = 0; a < e->num_arrows(); ++a) from_[e->arrow(a).src].push_back(a);
    }

    void run(std::vector<Rep>& out) {
        vertex_of_.assign(1, start_);
        decisions_.clear();
        dfs(0, 0, out);
    }

private:
    // OverEbar: arrow a maps comp(src) -> comp(dst)
    void dfs(std::size_t k, std::size_t ai, std::vector<Rep>& out) {
        while (k < vertex_of_.size() && ai >= from_[vertex_of_[k]].size()) {
            ++k;
            ai = 0;
        }
        if (k == vertex_of_.size()) {
            out.push_back(build());
            return;
        }
        const ArrowIndex a = from_[vertex_of_[k]][ai];
        const VertexIndex t = e_->arrow(a).dst;
        if (vertex_of_.size() < dmax_ && t >= start_) {
            Decision d;
            d.is_new = true;
            d.new_index = vertex_of_.size();
            vertex_of_.push_back(t);
            decisions_[{k, a}] = d;
            dfs(k, ai + 1, out);
            decisions_.erase({k, a});
            vertex_of_.pop_back();
        }
        std::vector<std::size_t> over;
        for (std::size_t j = 0; j < vertex_of_.size(); ++j)
            if (vertex_of_[j] == t) over.push_back(j);
        std::vector<std::uint64_t> c(over.size(), 0);
        for (;;) {
            decisions_[{k, a}] = Decision{false, 0, c, over};
            dfs(k, ai + 1, out);
            std::size_t i = 0;
            while (i < c.size() && ++c[i] == p_) c[i++] = 0;
            if (i == c.size()) break;
        }
        decisions_.erase({k, a});
    }

    Rep build() const {
        const std::size_t nv = e_->num_vertices();
        std::vector<std::size_t> dims(nv, 0), local(vertex_of_.size());
        for (std::size_t j = 0; j < vertex_of_.size(); ++j) local[j] = dims[vertex_of_[j]]++;
        std::vector<Matrix> maps;
        for (const auto& ar : e_->arrows()) maps.emplace_back(f_, dims[ar.dst], dims[ar.src]);
        for (const auto& [key, d] : decisions_) {
            const auto [k, a] = key;
            Matrix& m = maps[a];
            if (d.is_new) {
                m(local[d.new_index], local[k]) = Scalar::one(f_);
            } else {
                for (std::size_t i = 0; i < d.over.size(); ++i)
                    m(local[d.over[i]], local[k]) = Scalar::from_mpz(f_, mpz_class(static_cast<unsigned long>(d.coeffs[i])));
            }
        }
        return Rep(e_, Side::OverEbar, f_, dims, std::move(maps));
    }

    QuiverPtr e_;
    Field f_;
    std::uint64_t p_;
    std::size_t dmax_;
    VertexIndex start_;
    std::map<VertexIndex, std::vector<ArrowIndex>> from_;
    std::vector<VertexIndex> vertex_of_;
    std::map<std::pair<std::size_t, ArrowIndex>, Decision> decisions_;
};

std::string invariant_key(const Rep& r) {
    std::string key;
    for (auto d : r.dims()) key += std::to_string(d) + ",";
    key += "|";
    const Quiver& q = *r.quiver();
    for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
        if (q.arrow(a).src != q.arrow(a).dst || r.map(a).rows() == 0) continue;
        for (const auto& c : characteristic_polynomial(r.map(a))) key += c.to_string() + " ";
        key += ";";
    }
    return key;
}

}  // namespace

std::vector<Rep> cyclic_candidates(const QuiverPtr& e, const Field& f, std::size_t dmax) {
    if (!f.is_finite()) throw InfiniteFieldUnsupported("simple enumeration needs a finite field");
    std::vector<Rep> out;
    if (dmax == 0) return out;
    for (VertexIndex v = 0; v < e->num_vertices(); ++v) Spinner(e, f, dmax, v).run(out);
    return out;
}

std::vector<char> simple_filter_serial(const std::vector<Rep>& candidates) {
    std::vector<char> keep(candidates.size(), 0);
    for (std::size_t i = 0; i < candidates.size(); ++i) keep[i] = is_simple(candidates[i]) ? 1 : 0;
    return keep;
}

std::vector<char> simple_filter_parallel(const std::vector<Rep>& candidates) {
    std::vector<char> keep(candidates.size(), 0);
    const long n = static_cast<long>(candidates.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) keep[static_cast<std::size_t>(i)] = is_simple(candidates[static_cast<std::size_t>(i)]) ? 1 : 0;
    return keep;
}

std::vector<Rep> enumerate_simples(const QuiverPtr& e, const Field& f, std::size_t dmax, bool parallel) {
    const auto cands = cyclic_candidates(e, f, dmax);
    const auto keep = parallel ? simple_filter_parallel(cands) : simple_filter_serial(cands);
    std::vector<Rep> reps;
    std::map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (!keep[i]) continue;
        auto& bucket = classes[invariant_key(cands[i])];
        const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                      [&](std::size_t j) { return are_isomorphic(reps[j], cands[i]); });
        if (seen) continue;
        bucket.push_back(reps.size());
        reps.push_back(cands[i]);
    }
    std::stable_sort(reps.begin(), reps.end(),
                     [](const Rep& a, const Rep& b) { return a.total_dim() < b.total_dim(); });
    return reps;
}

}  // namespace lpa
