#include "sodlab/lattice.hpp"

#include <sstream>

namespace sodlab {

std::string to_string(const K0Class& c) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < c.rank(); ++i) {
        if (i) os << ",";
        os << c.v[i];
    }
    os << ")";
    return os.str();
}

EulerForm::EulerForm(const QuiverSpec& q) {
    int r = q.rank();
    g_.assign(r, std::vector<long long>(r, 0));
    if (q.kind == QuiverSpec::Kind::type_a) {
        // <S_i,S_i> = 1; the arrow i -> i+1 contributes <S_i,S_{i+1}> = -1.
        for (int i = 0; i < r; ++i) g_[i][i] = 1;
        for (int i = 0; i + 1 < r; ++i) g_[i][i + 1] = -1;
    } else {
        // Basis ([O], [S_{1,0}], [S_x]); rows pair against columns.
        g_ = {{1, 1, 1}, {0, 1, 0}, {-1, 0, 0}};
    }
}

long long EulerForm::pairing(const K0Class& x, const K0Class& y) const {
    int r = static_cast<int>(g_.size());
    require(x.rank() == r && y.rank() == r, "K0 class rank does not match the lattice");
    long long s = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) s += x.v[i] * g_[i][j] * y.v[j];
    return s;
}

long long euler_pairing(const QuiverSpec& q, const K0Class& x, const K0Class& y) {
    return EulerForm(q).pairing(x, y);
}

}  // namespace sodlab
