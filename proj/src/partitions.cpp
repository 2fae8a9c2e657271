#include "vertexlab/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace vertexlab {

Partition2D::Partition2D(std::vector<std::int64_t> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) throw ValidationError("partition rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw ValidationError("partition rows must be weakly decreasing");
    }
}

Partition2D Partition2D::parse(const std::string& text) {
    std::vector<std::int64_t> rows;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw ValidationError("empty row in partition literal '" + text + "'");
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw ValidationError("bad partition row '" + tok + "'");
        rows.push_back(v);
    }
    return Partition2D(std::move(rows));
}

std::int64_t Partition2D::size() const {
    std::int64_t s = 0;
    for (auto r : rows_) s += r;
    return s;
}

std::int64_t Partition2D::extent() const {
    if (rows_.empty()) return 0;
    return std::max<std::int64_t>(static_cast<std::int64_t>(rows_.size()), rows_[0]);
}

Partition2D Partition2D::transpose() const {
    if (rows_.empty()) return {};
    std::vector<std::int64_t> t(static_cast<std::size_t>(rows_[0]), 0);
    for (auto r : rows_)
        for (std::int64_t b = 0; b < r; ++b) ++t[static_cast<std::size_t>(b)];
    return Partition2D(std::move(t));
}

std::string Partition2D::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << ",";
        os << rows_[i];
    }
    os << ")";
    return os.str();
}

LegTriple LegTriple::parse(const std::string& text) {
    std::array<std::string, 3> parts;
    std::size_t idx = 0, start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ';') {
            if (idx >= 3) throw ValidationError("leg triple needs exactly three ';'-separated legs");
            parts[idx++] = text.substr(start, i - start);
            start = i + 1;
        }
    }
    if (idx != 3) throw ValidationError("leg triple needs exactly three ';'-separated legs");
    LegTriple t;
    for (std::size_t i = 0; i < 3; ++i) t.legs[i] = Partition2D::parse(parts[i]);
    return t;
}

std::int64_t LegTriple::extent() const {
    return std::max({legs[0].extent(), legs[1].extent(), legs[2].extent()});
}

std::string LegTriple::to_string() const {
    return legs[0].to_string() + ";" + legs[1].to_string() + ";" + legs[2].to_string();
}

LegTriple LegTriple::rotated() const {
    LegTriple t;
    t.legs[0] = legs[1].transpose();
    t.legs[1] = legs[2].transpose();
    t.legs[2] = legs[0];
    return t;
}

bool in_cylinder(const LegTriple& legs, int i, const Box& w) {
    switch (i) {
        case 1: return legs[0].contains(w[1], w[2]);
        case 2: return legs[1].contains(w[0], w[2]);
        case 3: return legs[2].contains(w[0], w[1]);
        default: throw ValidationError("cylinder index out of range");
    }
}

int cylinder_count(const LegTriple& legs, const Box& w) {
    int k = 0;
    for (int i = 1; i <= 3; ++i)
        if (in_cylinder(legs, i, w)) ++k;
    return k;
}

bool minimal_membership(const LegTriple& legs, const Box& w) {
    if (w[0] < 0 || w[1] < 0 || w[2] < 0) return false;
    return cylinder_count(legs, w) >= 1;
}

std::int64_t renormalized_volume_at(const LegTriple& legs, std::int64_t n) {
    std::int64_t boxes = 0;
    for (std::int64_t x = 0; x <= n; ++x)
        for (std::int64_t y = 0; y <= n; ++y)
            for (std::int64_t z = 0; z <= n; ++z)
                if (minimal_membership(legs, {x, y, z})) ++boxes;
    return boxes - (n + 1) * legs.total_size();
}

std::int64_t renormalized_volume(const LegTriple& legs) {
    std::int64_t n = 1 + legs.total_size() + legs.extent();
    std::int64_t v = renormalized_volume_at(legs, n);
    std::int64_t v2 = renormalized_volume_at(legs, n + 1);
    if (v != v2)
        throw ConsistencyError("renormalized volume not stable under cut-off increase for legs " +
                               legs.to_string());
    return v;
}

} // namespace vertexlab
