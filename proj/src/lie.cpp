#include "k3gm/lie.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace k3gm {

namespace {

// a + b eps with eps^2 = 0
struct Dual {
    Rational a;
    Rational b;

    Dual(const Rational &x = 0, const Rational &y = 0) : a(x), b(y) {}
    Dual(int x) : a(x), b(0) {}

    friend Dual operator+(const Dual &x, const Dual &y) { return {x.a + y.a, x.b + y.b}; }
    friend Dual operator-(const Dual &x, const Dual &y) { return {x.a - y.a, x.b - y.b}; }
    friend Dual operator*(const Dual &x, const Dual &y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
    friend Dual operator/(const Dual &x, const Dual &y)
    {
        if (y.a == 0) {
            throw std::domain_error("dual division by a non-unit");
        }
        return {x.a / y.a, (x.b * y.a - x.a * y.b) / (y.a * y.a)};
    }
    bool is_zero() const { return a == 0 && b == 0; }
};

template <class T>
Mat4<T> eye()
{
    Mat4<T> m;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m[i][j] = T(i == j ? 1 : 0);
        }
    }
    return m;
}

bool is_zero(const Rational &x) { return x == 0; }
bool is_zero(const Dual &x) { return x.is_zero(); }

template <class T>
std::array<Mat4<T>, 4> generators(const ModelParams &p, const T &h0, const T &h1, const T &h2, const T &h3)
{
    if (is_zero(h0)) {
        throw std::invalid_argument("group_generators: h0 must be nonzero");
    }
    const T C11(p.C(1, 1)), C12(p.C(1, 2)), C22(p.C(2, 2));
    std::array<Mat4<T>, 4> g{eye<T>(), eye<T>(), eye<T>(), eye<T>()};
    g[0][0][0] = h0;
    g[0][3][3] = T(1) / h0;

    T h11 = C12 * h3;
    if (is_zero(h11)) {
        throw std::invalid_argument("group_generators: h11 = C^alg_12 h3 must be nonzero");
    }
    g[1][1][1] = h11;
    g[1][1][2] = (T(1) - h11 * h11) / h11;
    g[1][2][1] = T(0);
    g[1][2][2] = T(1) / h11;

    g[2][1][0] = C11 * h1;
    g[2][2][0] = C12 * h1;
    g[2][3][1] = h1;
    g[2][3][0] = C11 * h1 * h1 / T(2);

    g[3][1][0] = C12 * h2;
    g[3][2][0] = C22 * h2;
    g[3][3][2] = h2;
    return g;
}

std::optional<Discrepancy> const_mismatch(const ConstMatrix &a, const ConstMatrix &b)
{
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (a[i][j] != b[i][j]) {
                return discrepancy("entry [" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                                   to_string(a[i][j]), to_string(b[i][j]));
            }
        }
    }
    return std::nullopt;
}

Check matrix_equal(const std::string &name, const ConstMatrix &a, const ConstMatrix &b)
{
    auto d = const_mismatch(a, b);
    return exact_check(name, !d, d);
}

ConstMatrix zero_matrix()
{
    ConstMatrix m;
    for (auto &row : m) {
        row.fill(0);
    }
    return m;
}

ConstMatrix scaled(const Rational &s, ConstMatrix m)
{
    for (auto &row : m) {
        for (auto &x : row) {
            x *= s;
        }
    }
    return m;
}

std::vector<Rational> flatten(const ConstMatrix &m)
{
    std::vector<Rational> v;
    for (const auto &row : m) {
        v.insert(v.end(), row.begin(), row.end());
    }
    return v;
}

} // namespace

ConstMatrix identity_matrix()
{
    return eye<Rational>();
}

ConstMatrix unit_matrix(int i, int j)
{
    ConstMatrix m = zero_matrix();
    m[i - 1][j - 1] = 1;
    return m;
}

std::string to_string(const ConstMatrix &m)
{
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < 4; ++j) {
            s += (j ? "," : "") + to_string(m[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

std::array<ConstMatrix, 4> group_generators(const ModelParams &p, const GroupParams &h)
{
    return generators<Rational>(p, h.h0, h.h1, h.h2, h.h3);
}

ConstMatrix printed_g3(const ModelParams &p, const Rational &h1)
{
    ConstMatrix g = generators<Rational>(p, 1, h1, 0, Rational(1, p.C(1, 2)))[2];
    g[3][0] = 0;
    return g;
}

std::array<ConstMatrix, 4> group_tangents(const ModelParams &p)
{
    const Dual eps(0, 1);
    const Dual one(1);
    const Dual base_h3(Rational(1, p.C(1, 2)));
    std::array<std::array<Mat4<Dual>, 4>, 4> fam{
        generators<Dual>(p, one + eps, 0, 0, base_h3),
        generators<Dual>(p, one, 0, 0, base_h3 + eps),
        generators<Dual>(p, one, eps, 0, base_h3),
        generators<Dual>(p, one, 0, eps, base_h3),
    };
    std::array<ConstMatrix, 4> out;
    for (int k = 0; k < 4; ++k) {
        out[k] = map_entries(fam[k][k], [](const Dual &x) { return x.b; });
    }
    return out;
}

std::array<ConstMatrix, 4> lie_generators(const ModelParams &p)
{
    const Rational C11 = p.C(1, 1), C12 = p.C(1, 2), C22 = p.C(2, 2);
    ConstMatrix g1 = zero_matrix();
    g1[0][0] = 1;
    g1[3][3] = -1;
    ConstMatrix g2 = zero_matrix();
    g2[1][1] = C12;
    g2[1][2] = -C11;
    g2[2][1] = C22;
    g2[2][2] = -C12;
    ConstMatrix g3 = zero_matrix();
    g3[1][0] = C11;
    g3[2][0] = C12;
    g3[3][1] = 1;
    ConstMatrix g4 = zero_matrix();
    g4[1][0] = C12;
    g4[2][0] = C22;
    g4[3][2] = 1;
    return {g1, g2, g3, g4};
}

std::array<ConstMatrix, 2> modular_matrices(const ModelParams &p)
{
    std::array<ConstMatrix, 2> a{zero_matrix(), zero_matrix()};
    for (int k = 1; k <= 2; ++k) {
        a[k - 1][0][k] = 1;
        a[k - 1][1][3] = p.C(1, k);
        a[k - 1][2][3] = p.C(2, k);
    }
    return a;
}

ConstMatrix conjugator(const ModelParams &p)
{
    ConstMatrix a = identity_matrix();
    Rational inv_hl(1, p.C_HL);
    a[1][1] = inv_hl;
    a[1][2] = -2 * inv_hl;
    a[2][2] = inv_hl;
    return a;
}

ConstMatrix phi_const(const ModelParams &p)
{
    ConstMatrix m = zero_matrix();
    m[0][3] = m[3][0] = -1;
    m[1][1] = p.C(1, 1);
    m[1][2] = m[2][1] = p.C(1, 2);
    m[2][2] = p.C(2, 2);
    return m;
}

LieBasis build_sl2sl2(const ModelParams &p)
{
    auto g = lie_generators(p);
    auto ar = modular_matrices(p);
    ConstMatrix A = conjugator(p);
    LieBasis b;
    b.J1 = A * (g[0] + g[1]);
    b.J2 = A * (g[0] - g[1]);
    b.J1m = A * g[2];
    b.J2m = A * g[3];
    b.J1p = A * ar[1];
    b.J2p = A * ar[0];
    return b;
}

LieBasis printed_targets()
{
    LieBasis b;
    b.J1 = unit_matrix(1, 1) + unit_matrix(2, 2) - unit_matrix(3, 3) - unit_matrix(4, 4);
    b.J2 = unit_matrix(1, 1) - unit_matrix(2, 2) + unit_matrix(3, 3) - unit_matrix(4, 4);
    b.J1m = unit_matrix(3, 1) + unit_matrix(4, 2);
    b.J2m = unit_matrix(2, 1) + unit_matrix(4, 3);
    b.J1p = unit_matrix(1, 3) + unit_matrix(2, 4);
    b.J2p = unit_matrix(1, 2) + unit_matrix(3, 4);
    return b;
}

int rank(const std::vector<ConstMatrix> &ms)
{
    std::vector<std::vector<Rational>> rows;
    for (const auto &m : ms) {
        rows.push_back(flatten(m));
    }
    int r = 0;
    for (int col = 0; col < 16 && r < static_cast<int>(rows.size()); ++col) {
        int piv = r;
        while (piv < static_cast<int>(rows.size()) && rows[piv][col] == 0) {
            ++piv;
        }
        if (piv == static_cast<int>(rows.size())) {
            continue;
        }
        std::swap(rows[piv], rows[r]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i != r && rows[i][col] != 0) {
                Rational f = rows[i][col] / rows[r][col];
                for (int j = 0; j < 16; ++j) {
                    rows[i][j] -= f * rows[r][j];
                }
            }
        }
        ++r;
    }
    return r;
}

VerificationReport verify_commutators(const LieBasis &b)
{
    VerificationReport rep;
    rep.suite = "lie";
    const ConstMatrix Jc[2] = {b.J1, b.J2};
    const ConstMatrix Jm[2] = {b.J1m, b.J2m};
    const ConstMatrix Jp[2] = {b.J1p, b.J2p};

    for (int a = 0; a < 2; ++a) {
        std::string s = std::to_string(a + 1);
        rep.add(matrix_equal("[J" + s + "+, J" + s + "-] = J" + s, commutator(Jp[a], Jm[a]), Jc[a]));
        // J0 is not defined separately; both readings are evaluated
        for (int sign : {1, -1}) {
            const ConstMatrix &X = sign == 1 ? Jp[a] : Jm[a];
            std::string xs = "J" + s + (sign == 1 ? "+" : "-");
            ConstMatrix target = scaled(sign, X);
            auto full = const_mismatch(commutator(Jc[a], X), target);
            auto half = const_mismatch(commutator(scaled(Rational(1, 2), Jc[a]), X), target);
            Check c = exact_check("[J" + s + "_0, " + xs + "] = " + (sign == 1 ? "" : "-") + xs, !full || !half,
                                  full && half ? full : std::nullopt);
            if (!half && !full) {
                c.convention = "J0 = J or J0 = J/2";
            } else if (!half) {
                c.convention = "J0 = J/2";
                c.note = "with J0 = J the bracket is " + std::string(sign == 1 ? "2 " : "-2 ") + xs;
            } else if (!full) {
                c.convention = "J0 = J";
            }
            rep.add(c);
        }
    }

    const ConstMatrix trip[2][3] = {{b.J1, b.J1m, b.J1p}, {b.J2, b.J2m, b.J2p}};
    const std::string tn[2][3] = {{"J1", "J1-", "J1+"}, {"J2", "J2-", "J2+"}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            rep.add(matrix_equal("[" + tn[0][i] + ", " + tn[1][j] + "] = 0", commutator(trip[0][i], trip[1][j]),
                                 zero_matrix()));
        }
    }
    auto all = b.all();
    auto names = LieBasis::names();
    bool self = true;
    for (const auto &x : all) {
        self = self && !const_mismatch(commutator(x, x), zero_matrix());
    }
    rep.add(exact_check("[X, X] = 0 for every basis element", self));

    std::vector<ConstMatrix> basis(all.begin(), all.end());
    int r = rank(basis);
    rep.add(exact_check("basis linearly independent", r == 6,
                        r == 6 ? std::nullopt : std::optional(discrepancy("rank", std::to_string(r), "6"))));
    std::optional<Discrepancy> open;
    for (int i = 0; i < 6 && !open; ++i) {
        for (int j = i + 1; j < 6 && !open; ++j) {
            auto ext = basis;
            ext.push_back(commutator(all[i], all[j]));
            if (rank(ext) != r) {
                open = discrepancy("[" + names[i] + ", " + names[j] + "]", "outside span", "in span");
            }
        }
    }
    rep.add(exact_check("span closed under the bracket", !open, open));
    return rep;
}

VerificationReport verify_lie(const ModelParams &p)
{
    VerificationReport rep;
    rep.model = p.name;
    rep.suite = "lie";
    const ConstMatrix Phi = phi_const(p);
    auto g = lie_generators(p);
    auto tangents = group_tangents(p);
    for (int k = 0; k < 4; ++k) {
        std::string s = "g" + std::to_string(k + 1);
        bool tr = !const_mismatch(g[k] * Phi + Phi * transpose(g[k]), zero_matrix());
        bool plain = !const_mismatch(g[k] * Phi + Phi * g[k], zero_matrix());
        Check c = exact_check("Lie " + s + ": X Phi + Phi X^T = 0", tr);
        c.note = std::string("untransposed X Phi + Phi X = 0 ") + (plain ? "holds" : "fails");
        rep.add(c);
        rep.add(matrix_equal("Lie " + s + " = derivative at identity of group " + s, g[k], tangents[k]));
    }

    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    auto rnd = [&] { return Rational(num(rng), den(rng)); };
    std::optional<Discrepancy> bad;
    int trials = 0;
    while (trials < 100) {
        GroupParams h{rnd(), rnd(), rnd(), rnd()};
        h.h0.canonicalize();
        h.h1.canonicalize();
        h.h2.canonicalize();
        h.h3.canonicalize();
        if (h.h0 == 0 || h.h3 == 0) {
            continue;
        }
        ++trials;
        auto gs = group_generators(p, h);
        for (int k = 0; k < 4 && !bad; ++k) {
            if (auto d = const_mismatch(gs[k] * Phi * transpose(gs[k]), Phi)) {
                d->monomial = "g" + std::to_string(k + 1) + " " + d->monomial;
                bad = d;
            }
        }
    }
    Check gc = exact_check("g Phi g^T = Phi for 100 random parameter sets", !bad, bad);
    rep.add(gc);
    rep.add(matrix_equal("g1(h0 = 1) = I", group_generators(p, {1, 0, 0, Rational(1, p.C(1, 2))})[0],
                         identity_matrix()));
    rep.add(matrix_equal("g3(h1 = 0) = I", group_generators(p, {1, 0, 0, Rational(1, p.C(1, 2))})[2],
                         identity_matrix()));

    LieBasis b = build_sl2sl2(p);
    LieBasis t = printed_targets();
    auto bs = b.all();
    auto ts = t.all();
    auto names = LieBasis::names();
    for (int k = 0; k < 6; ++k) {
        rep.add(matrix_equal(names[k] + " = printed target", bs[k], ts[k]));
    }
    LieBasis ref = build_sl2sl2(model_params(Model::E6));
    auto rs = ref.all();
    bool same = true;
    for (int k = 0; k < 6; ++k) {
        same = same && !const_mismatch(bs[k], rs[k]);
    }
    rep.add(exact_check("basis identical to the E6 basis", same));

    for (auto &c : verify_commutators(b).checks) {
        rep.add(std::move(c));
    }
    return rep;
}

VerificationReport verify_group_displays(const ModelParams &p)
{
    VerificationReport rep;
    rep.model = p.name;
    rep.suite = "group";
    const ConstMatrix Phi = phi_const(p);
    for (Rational h1 : {Rational(1), Rational(-2), Rational(3, 5)}) {
        ConstMatrix g = printed_g3(p, h1);
        auto d = const_mismatch(g * Phi * transpose(g), Phi);
        Check c = exact_check("printed g3(h1 = " + to_string(h1) + ") Phi g3^T = Phi", !d, d);
        c.note = "the completed element exp(h1 g3) carries (4,1) entry C^alg_11 h1^2/2";
        rep.add(c);
    }
    return rep;
}

} // namespace k3gm
