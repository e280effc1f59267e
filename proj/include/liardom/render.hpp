#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "liardom/embedding.hpp"
#include "liardom/geometry.hpp"

namespace liardom {

// Deterministic SVG 1.1 exports: fixed ordering, integer coordinates, no
// timestamps — identical inputs give byte-identical files. Node points are
// filled circles, joints filled squares, supports open circles.
std::string render_points_svg(const std::vector<PointRecord>& pts);
std::string render_embedding_svg(const GridEmbedding& emb);

void write_svg_file(const std::string& path, const std::string& svg);

} // namespace liardom
