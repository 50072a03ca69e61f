#include "cva/ring.hpp"

namespace cva {

RingPtr Ring::matrices(int n) {
    if (n < 1) throw std::invalid_argument("Ring::matrices: n must be >= 1");
    if (2 * n * n > 64) throw std::invalid_argument("Ring::matrices: n too large (2n^2 > 64)");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->n_ = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            r->names_.push_back("X[" + std::to_string(i) + "][" + std::to_string(j) + "]");
            r->degs_.push_back({1, 0});
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            r->names_.push_back("Y[" + std::to_string(i) + "][" + std::to_string(j) + "]");
            r->degs_.push_back({0, 1});
        }
    return r;
}

RingPtr Ring::custom(std::vector<std::string> names, std::vector<Bidegree> degs) {
    if (names.empty() || names.size() != degs.size())
        throw std::invalid_argument("Ring::custom: names/degrees mismatch");
    if (names.size() > 64)
        throw std::invalid_argument("Ring::custom: more than 64 variables");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->names_ = std::move(names);
    r->degs_ = std::move(degs);
    for (size_t i = 0; i < r->names_.size(); ++i)
        for (size_t j = i + 1; j < r->names_.size(); ++j)
            if (r->names_[i] == r->names_[j])
                throw std::invalid_argument("Ring::custom: duplicate variable name");
    return r;
}

RingPtr Ring::with_homogenizer() const {
    if (has_homogenizer()) throw std::logic_error("Ring: already has homogenizer");
    if (num_vars() + 1 > 64) throw std::invalid_argument("Ring: cannot extend past 64 variables");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->n_ = n_;
    r->names_ = names_;
    r->degs_ = degs_;
    r->names_.push_back("h");
    r->degs_.push_back({0, 0});
    r->hvar_ = r->num_vars() - 1;
    return r;
}

int Ring::find(const std::string& name) const {
    for (int v = 0; v < num_vars(); ++v)
        if (names_[v] == name) return v;
    return -1;
}

bool Ring::same_as(const Ring& o) const {
    return this == &o || (n_ == o.n_ && hvar_ == o.hvar_ && names_ == o.names_);
}

} // namespace cva
