#include "gpir/pir2.hpp"

#include <stdexcept>

namespace gpir {

UserSecret sample_secret(const StorageGraph& g, int phi, const Field& f, Rng& rng) {
    if (phi < 1 || phi > g.n()) throw std::invalid_argument("requested file index out of range");
    UserSecret sec;
    sec.phi = phi;
    sec.alpha.reserve(g.n());
    for (int i = 0; i < g.n(); ++i) sec.alpha.push_back(f.sample_nonzero(rng));
    sec.gamma.reserve(g.s);
    for (int v = 0; v < g.s; ++v) sec.gamma.push_back(f.sample_nonzero(rng));
    sec.h = f.sample_h(rng);
    return sec;
}

Mat build_query_matrix(const StorageGraph& g, const UserSecret& sec, const Field& f) {
    if (!is_two_uniform(g)) throw std::invalid_argument("protocol requires 2-uniform graph");
    if (sec.phi < 1 || sec.phi > g.n()) throw std::invalid_argument("requested file index out of range");
    if (static_cast<int>(sec.alpha.size()) != g.n() || static_cast<int>(sec.gamma.size()) != g.s)
        throw std::invalid_argument("secret shape does not match graph");
    Mat q(static_cast<std::size_t>(g.s), static_cast<std::size_t>(g.n()));
    for (int j = 1; j <= g.n(); ++j) {
        int lo = g.edges[j - 1][0]; // smaller vertex keeps +1 (or h in column phi)
        int hi = g.edges[j - 1][1]; // larger vertex gets -1
        Elem top = j == sec.phi ? sec.h : 1;
        q.at(lo - 1, j - 1) = f.mul(f.mul(sec.gamma[lo - 1], top), sec.alpha[j - 1]);
        q.at(hi - 1, j - 1) = f.neg(f.mul(sec.gamma[hi - 1], sec.alpha[j - 1]));
    }
    return q;
}

std::pair<Mat, UserSecret> gen_queries(const StorageGraph& g, int phi, const Field& f, Rng& rng) {
    UserSecret sec = sample_secret(g, phi, f, rng);
    return {build_query_matrix(g, sec, f), std::move(sec)};
}

SparseQuery sparse_row(const Mat& q, const StorageGraph& g, int server) {
    SparseQuery row;
    for (int j = 1; j <= g.n(); ++j) {
        if (std::binary_search(g.edges[j - 1].begin(), g.edges[j - 1].end(), server))
            row.push_back({j, q.at(server - 1, j - 1)});
    }
    return row;
}

std::vector<Elem> answer(const ServerContents& contents, const SparseQuery& query, const Field& f) {
    std::vector<Elem> a(contents.symbol_len, 0);
    for (const auto& [file, coeff] : query) {
        auto it = contents.holdings.find(file);
        if (it == contents.holdings.end())
            throw std::invalid_argument("query references a file this server does not hold");
        const auto& x = it->second;
        for (std::size_t k = 0; k < a.size(); ++k) a[k] = f.add(a[k], f.mul(coeff, x[k]));
    }
    return a;
}

std::vector<Elem> reconstruct(const std::vector<std::vector<Elem>>& answers,
                              const UserSecret& sec, const Field& f) {
    if (answers.size() != sec.gamma.size())
        throw std::invalid_argument("need exactly one answer per server");
    std::size_t len = answers.empty() ? 0 : answers.front().size();
    std::vector<Elem> sum(len, 0);
    for (std::size_t j = 0; j < answers.size(); ++j) {
        if (answers[j].size() != len) throw std::invalid_argument("answer length mismatch");
        Elem ginv = f.inv(sec.gamma[j]);
        for (std::size_t k = 0; k < len; ++k)
            sum[k] = f.add(sum[k], f.mul(ginv, answers[j][k]));
    }
    Elem scale = f.mul(f.sub(sec.h, 1), sec.alpha[sec.phi - 1]);
    if (scale == 0) throw std::logic_error("corrupted secret: (h-1)*alpha_phi vanished");
    Elem sinv = f.inv(scale);
    for (auto& v : sum) v = f.mul(sinv, v);
    return sum;
}

Transcript run_protocol(const StorageGraph& g, const Dataset& X, int phi, Rng& rng) {
    const Field& f = X.field;
    Transcript t;
    auto [q, sec] = gen_queries(g, phi, f, rng);
    t.query = std::move(q);
    t.secret = std::move(sec);
    auto servers = disperse(g, X);
    for (int j = 1; j <= g.s; ++j) {
        t.rows.push_back(sparse_row(t.query, g, j));
        t.upload += t.rows.back().size();
        t.answers.push_back(answer(servers[j - 1], t.rows.back(), f));
        t.download += t.answers.back().size();
    }
    t.result = reconstruct(t.answers, t.secret, f);
    return t;
}

} // namespace gpir
