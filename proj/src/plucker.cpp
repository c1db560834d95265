#include "grassblow/plucker.hpp"

#include <algorithm>
#include <string>

#include "grassblow/error.hpp"

namespace grassblow {

IndexTuple::IndexTuple(std::vector<int> e) : entries(std::move(e)) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 1) throw ParameterError("index entries must be >= 1");
        if (i + 1 < entries.size() && entries[i] <= entries[i + 1]) {
            throw ParameterError("index entries must be strictly decreasing");
        }
    }
}

std::string to_string(const IndexTuple& index) {
    std::string out = "(";
    for (std::size_t i = 0; i < index.entries.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(index.entries[i]);
    }
    return out + ")";
}

std::vector<IndexTuple> enumerate_plucker_indices(int p, int n) {
    if (!(0 < p && p <= n)) throw ParameterError("enumerate_plucker_indices: require 0 < p <= n");
    std::vector<IndexTuple> out;
    std::vector<int> pick(p);
    // combinations of 1..n, emitted as descending tuples, then sorted lexicographically
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == p) {
            std::vector<int> entries(pick.rbegin(), pick.rend());
            out.emplace_back(IndexTuple{std::move(entries)});
            return;
        }
        for (int v = start; v <= n - (p - depth - 1); ++v) {
            pick[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int block_of_index(const IndexTuple& index, int s) {
    if (s < 1) throw ParameterError("block_of_index: require s >= 1");
    int k = 0;
    for (int e : index.entries)
        if (e > s) ++k;
    return k;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long acc = 1;
    for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

long long block_size(const Parameters& params, int k) {
    validate(params);
    if (k < 0 || k > params.p) throw ParameterError("block_size: k out of range");
    return binomial(params.s, params.p - k) * binomial(params.n - params.s, k);
}

namespace {

IndexTuple swap_entry(std::vector<int> run, int mu, int nu) {
    auto it = std::find(run.begin(), run.end(), mu);
    run.erase(it);
    run.push_back(nu);
    std::sort(run.begin(), run.end(), std::greater<int>());
    return IndexTuple{std::move(run)};
}

}  // namespace

IndexTuple special_index(SpecialKind kind, const Parameters& params, int k, int mu, int nu) {
    validate(params);
    const int s = params.s;
    const int p = params.p;
    const int n = params.n;
    auto plain_run = [&](int kk) {
        std::vector<int> run;
        for (int v = s + kk; v >= s - p + kk + 1; --v) run.push_back(v);
        return run;
    };
    switch (kind) {
        case SpecialKind::Plain: {
            if (k < 0 || k > p) throw ParameterError("special_index: require 0 <= k <= p");
            if (s - p + k + 1 < 1 || s + k > n) throw ParameterError("special_index: I_k out of 1..n");
            return IndexTuple{plain_run(k)};
        }
        case SpecialKind::Star: {
            if (k < 1 || k > p - 1) throw ParameterError("special_index: require 1 <= k <= p-1");
            if (s - p + k < 1 || s + k + 1 > n) throw ParameterError("special_index: I*_k out of 1..n");
            std::vector<int> run;
            run.push_back(s + k + 1);
            for (int v = s + k - 1; v >= s - p + k + 2; --v) run.push_back(v);
            run.push_back(s - p + k);
            return IndexTuple{std::move(run)};
        }
        case SpecialKind::SwapLow: {
            if (k < 0 || k > p) throw ParameterError("special_index: require 0 <= k <= p");
            if (!(s - p + k + 1 <= mu && mu <= s)) throw ParameterError("special_index: mu out of range");
            if (!(1 <= nu && nu <= s - p + k)) throw ParameterError("special_index: nu out of range");
            return swap_entry(plain_run(k), mu, nu);
        }
        case SpecialKind::SwapHigh: {
            if (k < 0 || k > p) throw ParameterError("special_index: require 0 <= k <= p");
            if (!(s + 1 <= mu && mu <= s + k)) throw ParameterError("special_index: mu out of range");
            if (!(s + k + 1 <= nu && nu <= n)) throw ParameterError("special_index: nu out of range");
            return swap_entry(plain_run(k), mu, nu);
        }
    }
    throw ParameterError("special_index: unknown kind");
}

}  // namespace grassblow
