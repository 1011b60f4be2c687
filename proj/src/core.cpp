#include "crystalkit/core.hpp"

namespace crystalkit {

int pairing(const Weight& w, int i) {
    w.rank().check_index(i);
    int v = 2 * w.coord(i);
    if (i > 1) v -= w.coord(i - 1);
    if (i < w.rank().n()) v -= w.coord(i + 1);
    return v;
}

int phi_from_eps(int eps, const Weight& w, int i) { return eps + pairing(w, i); }

}  // namespace crystalkit
