#include "sftlab/render.hpp"

#include <fstream>

#include "sftlab/errors.hpp"

namespace sftlab {

void render_pgm(const Pattern& p, const Alphabet& alphabet, const std::string& path) {
    if (p.dim != 2) throw Error("render_pgm needs a two dimensional pattern");
    Cell lo, hi;
    if (!is_full_box(p, &lo, &hi)) throw Error("render_pgm needs a full box pattern");
    int k = static_cast<int>(alphabet.size());
    if (k > 256) throw Error("render_pgm supports at most 256 symbols");
    int width = hi[0] - lo[0] + 1;
    int height = hi[1] - lo[1] + 1;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << "P5\n" << width << " " << height << "\n255\n";
    for (int y = hi[1]; y >= lo[1]; --y) {
        for (int x = lo[0]; x <= hi[0]; ++x) {
            Symbol s = p.cells.at(Cell{x, y});
            int gray = k > 1 ? static_cast<int>(s) * 255 / (k - 1) : 0;
            out.put(static_cast<char>(static_cast<unsigned char>(gray)));
        }
    }
    if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace sftlab
