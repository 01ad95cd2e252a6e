#include "gpir/pir_r.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpir {

namespace {

int uniform_size(const StorageGraph& g) {
    if (g.n() == 0) throw std::invalid_argument("graph has no files");
    std::size_t r = g.edges.front().size();
    for (const auto& e : g.edges)
        if (e.size() != r) throw std::invalid_argument("graph is not r-uniform");
    return static_cast<int>(r);
}

} // namespace

Mat gen_shares(int r, int n, int phi, const Field& f, Rng& rng) {
    if (r < 2) throw std::invalid_argument("need replication factor at least 2");
    if (phi < 1 || phi > n) throw std::invalid_argument("requested file index out of range");
    Mat v(static_cast<std::size_t>(r), static_cast<std::size_t>(n));
    for (int i = 0; i < r - 1; ++i)
        for (int j = 0; j < n; ++j) v.at(i, j) = f.sample_uniform(rng);
    for (int j = 0; j < n; ++j) {
        Elem target = (j + 1 == phi) ? 1 : 0;
        Elem acc = 0;
        for (int i = 0; i < r - 1; ++i) acc = f.add(acc, v.at(i, j));
        v.at(r - 1, j) = f.sub(target, acc);
    }
    return v;
}

std::vector<SparseQuery> disperse_shares(const StorageGraph& g, const Mat& shares) {
    int r = uniform_size(g);
    if (shares.rows != static_cast<std::size_t>(r))
        throw std::invalid_argument("share matrix height does not match hyperedge size");
    if (shares.cols != static_cast<std::size_t>(g.n()))
        throw std::invalid_argument("share matrix width does not match file count");
    std::vector<SparseQuery> rows(g.s);
    for (int j = 1; j <= g.n(); ++j) {
        const auto& e = g.edges[j - 1]; // sorted ascending
        for (int k = 0; k < r; ++k) rows[e[k] - 1].push_back({j, shares.at(k, j - 1)});
    }
    return rows;
}

std::vector<Elem> reconstruct_r(const std::vector<std::vector<Elem>>& answers, const Field& f) {
    if (answers.empty()) throw std::invalid_argument("no answers");
    std::vector<Elem> sum(answers.front().size(), 0);
    for (const auto& a : answers) {
        if (a.size() != sum.size()) throw std::invalid_argument("answer length mismatch");
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = f.add(sum[k], a[k]);
    }
    return sum;
}

TranscriptR run_protocol_r(const StorageGraph& g, const Dataset& X, int phi, Rng& rng) {
    const Field& f = X.field;
    int r = uniform_size(g);
    TranscriptR t;
    t.shares = gen_shares(r, g.n(), phi, f, rng);
    t.rows = disperse_shares(g, t.shares);
    auto servers = disperse(g, X);
    for (int j = 1; j <= g.s; ++j) {
        t.upload += t.rows[j - 1].size();
        t.answers.push_back(answer(servers[j - 1], t.rows[j - 1], f));
        t.download += t.answers.back().size();
    }
    t.result = reconstruct_r(t.answers, f);
    return t;
}

std::map<std::vector<Elem>, long long> share_view_distribution(
    const StorageGraph& g, int phi, const Field& f, const std::vector<int>& S,
    long long budget) {
    int r = uniform_size(g);
    int n = g.n();
    Elem q = f.modulus();
    long long total = 1;
    for (int i = 0; i < (r - 1) * n; ++i) {
        total *= static_cast<long long>(q);
        if (total > budget) throw std::runtime_error("share enumeration exceeds budget");
    }
    std::vector<int> servers(S);
    std::sort(servers.begin(), servers.end());
    servers.erase(std::unique(servers.begin(), servers.end()), servers.end());

    std::map<std::vector<Elem>, long long> counts;
    std::vector<Elem> free((r - 1) * n, 0);
    for (long long it = 0;; ++it) {
        Mat v(static_cast<std::size_t>(r), static_cast<std::size_t>(n));
        for (int i = 0; i < r - 1; ++i)
            for (int j = 0; j < n; ++j) v.at(i, j) = free[i * n + j];
        for (int j = 0; j < n; ++j) {
            Elem target = (j + 1 == phi) ? 1 : 0;
            Elem acc = 0;
            for (int i = 0; i < r - 1; ++i) acc = f.add(acc, v.at(i, j));
            v.at(r - 1, j) = f.sub(target, acc);
        }
        auto rows = disperse_shares(g, v);
        std::vector<Elem> view;
        for (int srv : servers)
            for (const auto& [file, coeff] : rows[srv - 1]) {
                (void)file;
                view.push_back(coeff);
            }
        ++counts[view];
        // Odometer over the free entries.
        std::size_t pos = 0;
        while (pos < free.size() && ++free[pos] == q) free[pos++] = 0;
        if (pos == free.size()) break;
    }
    return counts;
}

} // namespace gpir
