#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace rp4 {

// 1-based abstract vertex identifier.
using VertexId = int;

// A face: strictly increasing vertex list. dim() = size - 1, so the empty
// simplex has dimension -1.
class Simplex {
public:
    Simplex() = default;

    explicit Simplex(std::vector<VertexId> verts) : v_(std::move(verts)) {
        std::sort(v_.begin(), v_.end());
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (v_[i] <= 0)
                throw std::invalid_argument("simplex: vertex ids must be positive");
            if (i > 0 && v_[i] == v_[i - 1])
                throw std::invalid_argument("simplex: repeated vertex");
        }
    }

    Simplex(std::initializer_list<VertexId> verts)
        : Simplex(std::vector<VertexId>(verts)) {}

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    const std::vector<VertexId>& vertices() const { return v_; }

    bool contains(VertexId v) const {
        return std::binary_search(v_.begin(), v_.end(), v);
    }

    bool contains_all(const Simplex& other) const {
        return std::includes(v_.begin(), v_.end(),
                             other.v_.begin(), other.v_.end());
    }

    bool intersects(const Simplex& other) const {
        auto a = v_.begin();
        auto b = other.v_.begin();
        while (a != v_.end() && b != other.v_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return true;
        }
        return false;
    }

    Simplex union_with(const Simplex& other) const {
        std::vector<VertexId> out;
        out.reserve(v_.size() + other.v_.size());
        std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                       std::back_inserter(out));
        Simplex s;
        s.v_ = std::move(out);
        return s;
    }

    Simplex minus(const Simplex& other) const {
        std::vector<VertexId> out;
        std::set_difference(v_.begin(), v_.end(),
                            other.v_.begin(), other.v_.end(),
                            std::back_inserter(out));
        Simplex s;
        s.v_ = std::move(out);
        return s;
    }

    Simplex minus_vertex(VertexId v) const {
        std::vector<VertexId> out;
        out.reserve(v_.size());
        for (VertexId u : v_)
            if (u != v) out.push_back(u);
        Simplex s;
        s.v_ = std::move(out);
        return s;
    }

    Simplex with_vertex(VertexId v) const {
        return union_with(Simplex{v});
    }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<VertexId> v_;
};

inline std::string to_string(const Simplex& s) {
    std::string out = "[";
    bool first = true;
    for (VertexId v : s) {
        if (!first) out += ' ';
        out += std::to_string(v);
        first = false;
    }
    out += ']';
    return out;
}

// All k-subsets of `s`, as simplices, in lexicographic order.
inline std::vector<Simplex> subsets_of_size(const Simplex& s, std::size_t k) {
    std::vector<Simplex> result;
    if (k > s.size()) return result;
    const auto& v = s.vertices();
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<VertexId> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = v[idx[i]];
        result.push_back(Simplex(std::move(pick)));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == v.size() - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return result;
}

}  // namespace rp4
