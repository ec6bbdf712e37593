#include "fatpoints/base_lines.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fatpoints {

Int line_multiplicity(const LinearSystem& sys, std::size_t i, std::size_t j) {
    if (i == j || i >= sys.points() || j >= sys.points())
        throw std::invalid_argument("line_multiplicity: needs two distinct existing points");
    return sys.mults[i] + sys.mults[j] - sys.degree;
}

std::vector<MultipleLine> multiple_lines(const LinearSystem& sys) {
    std::vector<MultipleLine> out;
    for (std::size_t i = 0; i < sys.points(); ++i) {
        for (std::size_t j = i + 1; j < sys.points(); ++j) {
            const Int t = sys.mults[i] + sys.mults[j] - sys.degree;
            if (t >= 1) out.push_back({i, j, t});
        }
    }
    return out;
}

Int line_speciality_term(const LinearSystem& sys) {
    Int out = 0;
    for (const MultipleLine& line : multiple_lines(sys))
        if (line.t >= 2) out += binomial(line.t + 1, 3);
    return out;
}

LineGraphShape classify_line_graph(const std::vector<MultipleLine>& lines) {
    LineGraphShape shape;
    if (lines.empty()) {
        shape.kind = LineGraphShape::Kind::Empty;
        return shape;
    }

    std::set<std::size_t> vertices;
    for (const MultipleLine& line : lines) {
        vertices.insert(line.i);
        vertices.insert(line.j);
    }

    // Star: every edge passes through one common vertex.
    for (std::size_t c : {lines[0].i, lines[0].j}) {
        bool common = true;
        for (const MultipleLine& line : lines)
            if (line.i != c && line.j != c) { common = false; break; }
        if (common) {
            shape.kind = LineGraphShape::Kind::Star;
            shape.center = c;
            for (std::size_t v : vertices)
                if (v != c) shape.leaves.push_back(v);
            return shape;
        }
    }

    if (lines.size() == 3 && vertices.size() == 3) {
        shape.kind = LineGraphShape::Kind::Triangle;
        std::size_t pos = 0;
        for (std::size_t v : vertices) shape.vertices[pos++] = v;
        return shape;
    }

    shape.kind = LineGraphShape::Kind::Other;
    return shape;
}

LineGraphShape classify_line_graph(const LinearSystem& sys) {
    return classify_line_graph(multiple_lines(sys));
}

const char* to_string(LineGraphShape::Kind kind) {
    switch (kind) {
        case LineGraphShape::Kind::Empty: return "empty";
        case LineGraphShape::Kind::Star: return "star";
        case LineGraphShape::Kind::Triangle: return "triangle";
        case LineGraphShape::Kind::Other: return "other";
    }
    return "?";
}

}  // namespace fatpoints
