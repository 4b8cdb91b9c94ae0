#include "toric/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toric {

namespace mp = boost::multiprecision;

namespace {

std::vector<Integer> column_as_vector(const IntMatrix& m, Index j)
{
    std::vector<Integer> v(static_cast<size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i)
        v[static_cast<size_t>(i)] = m(i, j);
    return v;
}

IntMatrix columns_from_vectors(const std::vector<std::vector<Integer>>& cols, Index rows)
{
    IntMatrix m(rows, static_cast<Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (Index i = 0; i < rows; ++i)
            m(i, static_cast<Index>(j)) = cols[j][static_cast<size_t>(i)];
    return m;
}

Integer dot(const IntVector& u, const IntVector& v)
{
    Integer s = 0;
    for (Index i = 0; i < u.size(); ++i)
        s += u(i) * v(i);
    return s;
}

int sign_of(const Integer& x)
{
    if (x > 0)
        return 1;
    if (x < 0)
        return -1;
    return 0;
}

// Facet normals of a full-dimensional pointed cone given by ray coordinates
// in its own span. Candidate hyperplanes are spanned by (d-1)-subsets of
// rays; a candidate is kept when all rays lie on one side. Throws when the
// normals do not span, i.e. the cone contains a line.
IntMatrix span_facet_normals(const IntMatrix& rays_span)
{
    const Index d = rays_span.rows();
    const Index k = rays_span.cols();
    std::set<std::vector<Integer>> found;

    for (const auto& subset : lex_combinations(static_cast<int>(k), static_cast<int>(d - 1))) {
        IntMatrix sub(d, static_cast<Index>(subset.size()));
        for (size_t c = 0; c < subset.size(); ++c)
            sub.col(static_cast<Index>(c)) = rays_span.col(subset[c]);
        IntMatrix ker = kernel_basis(IntMatrix(sub.transpose()));
        if (ker.cols() != 1)
            continue;  // subset does not span a hyperplane
        IntVector u = ker.col(0);
        bool nonneg = true, nonpos = true;
        for (Index j = 0; j < k; ++j) {
            int s = sign_of(dot(u, rays_span.col(j)));
            if (s > 0)
                nonpos = false;
            if (s < 0)
                nonneg = false;
        }
        if (nonneg)
            found.insert(column_as_vector(u, 0));
        else if (nonpos) {
            IntVector neg = -u;
            found.insert(column_as_vector(neg, 0));
        }
    }

    std::vector<std::vector<Integer>> cols(found.begin(), found.end());
    IntMatrix normals = columns_from_vectors(cols, d);
    if (rank_of(normals) != d)
        throw NotStrictlyConvex("cone contains a line");
    return normals;
}

}  // namespace

Cone Cone::zero_cone(Index ambient_rank)
{
    Cone c;
    c.ambient_rank_ = ambient_rank;
    c.dim_ = 0;
    c.rays_ = IntMatrix(ambient_rank, 0);
    c.oriented_basis_ = IntMatrix(ambient_rank, 0);
    c.facet_normals_ = IntMatrix(ambient_rank, 0);
    return c;
}

Cone Cone::from_rays(const IntMatrix& generators, Index ambient_rank)
{
    if (generators.rows() != ambient_rank)
        throw InvariantError("Cone::from_rays: ambient rank mismatch");

    std::set<std::vector<Integer>> distinct;
    for (Index j = 0; j < generators.cols(); ++j) {
        IntVector p = primitive_vector(generators.col(j));
        if (vector_gcd(p) == 0)
            continue;  // zero generator adds nothing
        distinct.insert(column_as_vector(IntMatrix(p), 0));
    }
    if (distinct.empty())
        return zero_cone(ambient_rank);

    std::vector<std::vector<Integer>> ray_cols(distinct.begin(), distinct.end());
    IntMatrix rays = columns_from_vectors(ray_cols, ambient_rank);

    IntMatrix basis = saturation_basis(rays);
    const Index d = basis.cols();
    IntMatrix rays_span = solve_integral(basis, rays);
    IntMatrix normals_span = span_facet_normals(rays_span);

    // Keep extreme rays only: a ray is extreme iff the normals active on it
    // cut out a 1-dimensional face.
    std::vector<std::vector<Integer>> extreme;
    for (Index j = 0; j < rays.cols(); ++j) {
        std::vector<std::vector<Integer>> active;
        for (Index c = 0; c < normals_span.cols(); ++c)
            if (dot(normals_span.col(c), rays_span.col(j)) == 0)
                active.push_back(column_as_vector(normals_span, c));
        IntMatrix act = columns_from_vectors(active, d);
        if (rank_of(act) == d - 1)
            extreme.push_back(column_as_vector(rays, j));
    }
    std::sort(extreme.begin(), extreme.end());

    Cone c;
    c.ambient_rank_ = ambient_rank;
    c.dim_ = d;
    c.rays_ = columns_from_vectors(extreme, ambient_rank);
    c.oriented_basis_ = basis;

    // Lift the span-level normals to the ambient dual lattice. The basis is
    // saturated, so the restriction map of functionals is onto and the solve
    // is integral.
    std::vector<std::vector<Integer>> lifted;
    IntMatrix basis_t = basis.transpose();
    for (Index cidx = 0; cidx < normals_span.cols(); ++cidx) {
        IntMatrix u = solve_integral(basis_t, IntMatrix(normals_span.col(cidx)));
        IntVector up = primitive_vector(u.col(0));
        lifted.push_back(column_as_vector(IntMatrix(up), 0));
    }
    std::sort(lifted.begin(), lifted.end());
    c.facet_normals_ = columns_from_vectors(lifted, ambient_rank);
    return c;
}

Cone Cone::with_orientation(int sign) const
{
    if (sign != 1 && sign != -1)
        throw InvariantError("Cone::with_orientation: sign must be +1 or -1");
    Cone c = *this;
    c.orientation_ = sign;
    return c;
}

ConeKey Cone::key() const
{
    ConeKey k;
    for (Index j = 0; j < rays_.cols(); ++j)
        k.push_back(column_as_vector(rays_, j));
    return k;
}

std::vector<Cone> Cone::faces() const
{
    std::map<ConeKey, Cone> found;
    const Index f = facet_normals_.cols();
    if (f > 20)
        throw InvariantError("Cone::faces: too many facets for subset enumeration");
    for (unsigned long mask = 0; mask < (1ul << f); ++mask) {
        std::vector<std::vector<Integer>> sel;
        for (Index j = 0; j < rays_.cols(); ++j) {
            bool keep = true;
            for (Index c = 0; c < f && keep; ++c)
                if ((mask >> c) & 1ul)
                    keep = dot(facet_normals_.col(c), rays_.col(j)) == 0;
            if (keep)
                sel.push_back(column_as_vector(rays_, j));
        }
        Cone face = from_rays(columns_from_vectors(sel, ambient_rank_), ambient_rank_);
        found.emplace(face.key(), face);
    }

    std::vector<Cone> out;
    for (auto& [k, c] : found)
        out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
        if (a.dim() != b.dim())
            return a.dim() < b.dim();
        return a.key() < b.key();
    });
    return out;
}

std::string Cone::to_string() const
{
    std::ostringstream os;
    os << "cone{";
    for (Index j = 0; j < rays_.cols(); ++j) {
        if (j)
            os << ", ";
        os << "(";
        for (Index i = 0; i < rays_.rows(); ++i) {
            if (i)
                os << ",";
            os << rays_(i, j);
        }
        os << ")";
    }
    os << "}";
    return os.str();
}

IntMatrix dual_description(const IntMatrix& generators, Index ambient_rank)
{
    return Cone::from_rays(generators, ambient_rank).facet_normals();
}

namespace {

// Shared tail of the two incidence-sign entry points: the sign of the
// determinant expressing [w, basis(facet)] in the coordinates of
// basis(cone), times both orientation flips.
int incidence_sign_from(const Cone& facet, const Cone& cone, const IntVector& w)
{
    IntMatrix m = hcat(IntMatrix(w), facet.oriented_basis());
    IntMatrix coords = solve_integral(cone.oriented_basis(), m);
    int s = sign_of(determinant(coords));
    if (s == 0)
        throw InvariantError("incidence_sign: degenerate frame");
    return s * facet.orientation() * cone.orientation();
}

bool contact_rays_match(const Cone& facet, const Cone& cone, const IntVector& u)
{
    std::set<std::vector<Integer>> contact;
    for (Index j = 0; j < cone.rays().cols(); ++j) {
        Integer s = dot(u, cone.rays().col(j));
        if (s < 0)
            return false;  // u is not a supporting functional
        if (s == 0)
            contact.insert(column_as_vector(cone.rays(), j));
    }
    std::set<std::vector<Integer>> facet_rays;
    for (Index j = 0; j < facet.rays().cols(); ++j)
        facet_rays.insert(column_as_vector(facet.rays(), j));
    return contact == facet_rays;
}

}  // namespace

int incidence_sign(const Cone& facet, const Cone& cone)
{
    if (facet.ambient_rank() != cone.ambient_rank())
        throw NotFacet("incidence_sign: ambient rank mismatch");
    if (facet.dim() + 1 != cone.dim())
        throw NotFacet("incidence_sign: dimension gap is not one");

    for (Index c = 0; c < cone.facet_normals().cols(); ++c) {
        IntVector u = cone.facet_normals().col(c);
        if (!contact_rays_match(facet, cone, u))
            continue;
        IntVector w = zero_matrix(cone.ambient_rank(), 1).col(0);
        for (Index j = 0; j < cone.rays().cols(); ++j)
            if (dot(u, cone.rays().col(j)) > 0)
                w += cone.rays().col(j);
        return incidence_sign_from(facet, cone, w);
    }
    throw NotFacet("incidence_sign: first cone is not a facet of the second");
}

int incidence_sign_with(const Cone& facet, const Cone& cone, const IntVector& u,
                        const IntVector& w)
{
    if (facet.dim() + 1 != cone.dim())
        throw NotFacet("incidence_sign_with: dimension gap is not one");
    if (!contact_rays_match(facet, cone, u))
        throw NotFacet("incidence_sign_with: functional does not cut out the facet");
    if (dot(u, w) <= 0)
        throw NotFacet("incidence_sign_with: <u, w> must be positive");
    return incidence_sign_from(facet, cone, w);
}

Cone cone_intersection(const Cone& a, const Cone& b)
{
    if (a.ambient_rank() != b.ambient_rank())
        throw InvariantError("cone_intersection: ambient rank mismatch");
    const Index n = a.ambient_rank();
    if (a.is_zero() || b.is_zero())
        return Cone::zero_cone(n);

    IntMatrix orth_a = kernel_basis(IntMatrix(a.rays().transpose()));
    IntMatrix orth_b = kernel_basis(IntMatrix(b.rays().transpose()));
    IntMatrix subspace = kernel_basis(IntMatrix(hcat(orth_a, orth_b).transpose()));
    const Index e = subspace.cols();
    if (e == 0)
        return Cone::zero_cone(n);

    std::vector<IntVector> ineqs;
    IntMatrix st = subspace.transpose();
    for (const IntMatrix* normals : {&a.facet_normals(), &b.facet_normals()}) {
        for (Index j = 0; j < normals->cols(); ++j) {
            IntVector restricted = st * normals->col(j);
            if (vector_gcd(restricted) != 0)
                ineqs.push_back(primitive_vector(restricted));
        }
    }

    // Double description: (L, R) with current cone = span(L) + cone(R).
    std::vector<IntVector> lin;
    for (Index i = 0; i < e; ++i)
        lin.push_back(identity_matrix(e).col(i));
    std::vector<IntVector> rays;

    auto dedupe = [](std::vector<IntVector>& vs) {
        std::set<std::vector<Integer>> seen;
        std::vector<IntVector> out;
        for (const IntVector& v : vs) {
            if (vector_gcd(v) == 0)
                continue;
            if (seen.insert(column_as_vector(IntMatrix(v), 0)).second)
                out.push_back(v);
        }
        vs = std::move(out);
    };

    for (const IntVector& u : ineqs) {
        Index pivot = -1;
        for (size_t i = 0; i < lin.size(); ++i) {
            if (dot(u, lin[i]) != 0) {
                pivot = static_cast<Index>(i);
                break;
            }
        }
        if (pivot >= 0) {
            IntVector l0 = lin[static_cast<size_t>(pivot)];
            Integer v0 = dot(u, l0);
            if (v0 < 0) {
                l0 = -l0;
                v0 = -v0;
            }
            std::vector<IntVector> new_lin;
            for (size_t i = 0; i < lin.size(); ++i) {
                if (static_cast<Index>(i) == pivot)
                    continue;
                IntVector adj = v0 * lin[i] - dot(u, lin[i]) * l0;
                new_lin.push_back(primitive_vector(adj));
            }
            std::vector<IntVector> new_rays;
            for (const IntVector& r : rays) {
                IntVector adj = v0 * r - dot(u, r) * l0;
                new_rays.push_back(primitive_vector(adj));
            }
            new_rays.push_back(l0);
            lin = std::move(new_lin);
            rays = std::move(new_rays);
        } else {
            std::vector<IntVector> plus, zero, minus;
            for (const IntVector& r : rays) {
                int s = sign_of(dot(u, r));
                (s > 0 ? plus : s == 0 ? zero : minus).push_back(r);
            }
            std::vector<IntVector> next = plus;
            next.insert(next.end(), zero.begin(), zero.end());
            for (const IntVector& p : plus)
                for (const IntVector& m : minus)
                    next.push_back(primitive_vector(IntVector(dot(u, p) * m - dot(u, m) * p)));
            rays = std::move(next);
        }
        dedupe(rays);
    }

    if (!lin.empty())
        throw InvariantError("cone_intersection: unexpected lineality");

    IntMatrix rays_e(e, static_cast<Index>(rays.size()));
    for (size_t j = 0; j < rays.size(); ++j)
        rays_e.col(static_cast<Index>(j)) = rays[j];
    return Cone::from_rays(IntMatrix(subspace * rays_e), n);
}

// --- Fan -------------------------------------------------------------------

void Fan::index_cones()
{
    std::sort(cones_.begin(), cones_.end(), [](const Cone& a, const Cone& b) {
        if (a.dim() != b.dim())
            return a.dim() < b.dim();
        return a.key() < b.key();
    });
    keys_.clear();
    for (const Cone& c : cones_)
        keys_.push_back(c.key());

    codim_.assign(static_cast<size_t>(rank_) + 1, {});
    for (int i = 0; i < num_cones(); ++i) {
        Index k = rank_ - cones_[static_cast<size_t>(i)].dim();
        codim_[static_cast<size_t>(k)].push_back(i);
    }

    faces_of_.assign(cones_.size(), {});
    for (int i = 0; i < num_cones(); ++i) {
        std::vector<int> ids;
        for (const Cone& f : cones_[static_cast<size_t>(i)].faces()) {
            int j = index_of(f.key());
            if (j >= 0)
                ids.push_back(j);
        }
        std::sort(ids.begin(), ids.end());
        faces_of_[static_cast<size_t>(i)] = std::move(ids);
    }

    orth_.clear();
    for (const Cone& c : cones_)
        orth_.push_back(kernel_basis(IntMatrix(c.rays().transpose())));
}

Fan Fan::from_maximal_cones(Index rank, const std::vector<IntMatrix>& max_cone_rays)
{
    std::map<ConeKey, Cone> all;
    for (const IntMatrix& rays : max_cone_rays) {
        Cone c = Cone::from_rays(rays, rank);
        for (Cone& f : c.faces())
            all.emplace(f.key(), std::move(f));
    }
    if (all.empty())
        all.emplace(Cone::zero_cone(rank).key(), Cone::zero_cone(rank));

    Fan fan;
    fan.rank_ = rank;
    for (auto& [k, c] : all)
        fan.cones_.push_back(std::move(c));
    fan.index_cones();
    return fan;
}

Fan Fan::from_cones(Index rank, std::vector<Cone> cones)
{
    std::map<ConeKey, Cone> all;
    for (Cone& c : cones)
        all.emplace(c.key(), std::move(c));
    Fan fan;
    fan.rank_ = rank;
    for (auto& [k, c] : all)
        fan.cones_.push_back(std::move(c));
    fan.index_cones();
    return fan;
}

const std::vector<int>& Fan::cones_of_codim(int k) const
{
    static const std::vector<int> empty;
    if (k < 0 || k > rank_)
        return empty;
    return codim_[static_cast<size_t>(k)];
}

bool Fan::is_face(int tau, int sigma) const
{
    const auto& f = faces_of_[static_cast<size_t>(sigma)];
    return std::binary_search(f.begin(), f.end(), tau);
}

const std::vector<int>& Fan::faces_of(int sigma) const
{
    return faces_of_[static_cast<size_t>(sigma)];
}

std::vector<int> Fan::maximal_cone_indices() const
{
    std::vector<int> out;
    for (int i = 0; i < num_cones(); ++i) {
        bool maximal = true;
        for (int j = 0; j < num_cones() && maximal; ++j)
            if (j != i && is_face(i, j))
                maximal = false;
        if (maximal)
            out.push_back(i);
    }
    return out;
}

int Fan::index_of(const ConeKey& key) const
{
    for (size_t i = 0; i < keys_.size(); ++i)
        if (keys_[i] == key)
            return static_cast<int>(i);
    return -1;
}

const IntMatrix& Fan::orthogonal_basis(int sigma) const
{
    return orth_[static_cast<size_t>(sigma)];
}

Fan Fan::with_orientations(const std::vector<int>& signs) const
{
    if (signs.size() != cones_.size())
        throw InvariantError("Fan::with_orientations: sign count mismatch");
    Fan fan = *this;
    for (size_t i = 0; i < fan.cones_.size(); ++i)
        fan.cones_[i] = fan.cones_[i].with_orientation(signs[i]);
    return fan;
}

bool Fan::same_combinatorics(const Fan& other) const
{
    if (rank_ != other.rank_ || cones_.size() != other.cones_.size())
        return false;
    for (size_t i = 0; i < cones_.size(); ++i) {
        if (keys_[i] != other.keys_[i])
            return false;
        if (cones_[i].orientation() != other.cones_[i].orientation())
            return false;
    }
    return true;
}

FanValidation validate_fan(const Fan& fan)
{
    FanValidation v;

    // Primitivity of rays (enforced at construction; re-checked cheaply).
    for (int i = 0; i < fan.num_cones(); ++i) {
        const IntMatrix& rays = fan.cone(i).rays();
        for (Index j = 0; j < rays.cols(); ++j)
            if (vector_gcd(rays.col(j)) != 1)
                v.violations.push_back("non-primitive ray in " + fan.cone(i).to_string());
    }

    // Face closure, with the face sets recomputed from scratch.
    std::vector<std::set<ConeKey>> face_keys(static_cast<size_t>(fan.num_cones()));
    for (int i = 0; i < fan.num_cones(); ++i) {
        for (const Cone& f : fan.cone(i).faces()) {
            face_keys[static_cast<size_t>(i)].insert(f.key());
            if (fan.index_of(f.key()) < 0)
                v.violations.push_back("face " + f.to_string() + " of " +
                                       fan.cone(i).to_string() + " is missing from the fan");
        }
    }

    // Pairwise intersections must be common faces.
    for (int i = 0; i < fan.num_cones(); ++i) {
        for (int j = i + 1; j < fan.num_cones(); ++j) {
            if (fan.is_face(i, j) || fan.is_face(j, i))
                continue;
            Cone t = cone_intersection(fan.cone(i), fan.cone(j));
            ConeKey tk = t.key();
            if (!face_keys[static_cast<size_t>(i)].count(tk) ||
                !face_keys[static_cast<size_t>(j)].count(tk))
                v.violations.push_back("intersection of " + fan.cone(i).to_string() + " and " +
                                       fan.cone(j).to_string() + " is not a common face");
        }
    }

    // Completeness: maximal cones are full-dimensional and every wall lies
    // between exactly two of them.
    std::vector<std::string> completeness;
    std::vector<int> maximal = fan.maximal_cone_indices();
    for (int m : maximal) {
        if (fan.cone(m).dim() != fan.rank())
            completeness.push_back("maximal cone " + fan.cone(m).to_string() +
                                   " is not full-dimensional");
    }
    for (int i = 0; i < fan.num_cones(); ++i) {
        if (fan.cone(i).dim() != fan.rank() - 1)
            continue;
        int count = 0;
        for (int m : maximal)
            if (fan.cone(m).dim() == fan.rank() &&
                face_keys[static_cast<size_t>(m)].count(fan.cone(i).key()))
                ++count;
        if (count != 2)
            completeness.push_back("wall " + fan.cone(i).to_string() + " borders " +
                                   std::to_string(count) + " maximal cones");
    }
    v.complete = completeness.empty();
    for (std::string& s : completeness)
        v.violations.push_back(std::move(s));

    return v;
}

QuotientFan quotient_fan(const Fan& fan, int sigma)
{
    if (sigma < 0 || sigma >= fan.num_cones())
        throw ConeNotInFan("quotient_fan: cone index out of range");

    const Cone& sig = fan.cone(sigma);
    const Index n = fan.rank();
    const Index d = sig.dim();

    // Lattice projection N -> N / (span sigma /\ N), via a unimodular
    // completion of the saturated basis of sigma with determinant +1.
    IntMatrix projection;
    if (d == 0) {
        projection = identity_matrix(n);
    } else if (d == n) {
        projection = IntMatrix(0, n);
    } else {
        SmithForm s = smith_normal_form(sig.oriented_basis());
        IntMatrix w = hcat(sig.oriented_basis(), IntMatrix(s.U.rightCols(n - d)));
        if (determinant(w) < 0)
            w.col(n - 1) = -w.col(n - 1);
        IntMatrix w_inv = solve_integral(w, identity_matrix(n));
        projection = w_inv.bottomRows(n - d);
    }

    std::vector<int> star;
    for (int t = 0; t < fan.num_cones(); ++t)
        if (fan.is_face(sigma, t))
            star.push_back(t);

    std::vector<IntMatrix> max_rays;
    for (int m : fan.maximal_cone_indices())
        if (fan.is_face(sigma, m))
            max_rays.push_back(projection * fan.cone(m).rays());
    if (max_rays.empty())
        max_rays.push_back(IntMatrix(n - d, 0));

    QuotientFan q;
    q.fan = Fan::from_maximal_cones(n - d, max_rays);
    q.projection = projection;
    q.quotient_index.assign(static_cast<size_t>(fan.num_cones()), -1);

    if (q.fan.num_cones() != static_cast<int>(star.size()))
        throw InvariantError("quotient_fan: star does not biject with quotient cones");
    q.parent_cone.assign(static_cast<size_t>(q.fan.num_cones()), -1);

    std::vector<int> signs(static_cast<size_t>(q.fan.num_cones()), 1);
    for (int t : star) {
        Cone image = Cone::from_rays(IntMatrix(projection * fan.cone(t).rays()), n - d);
        int qi = q.fan.index_of(image.key());
        if (qi < 0 || q.parent_cone[static_cast<size_t>(qi)] != -1)
            throw InvariantError("quotient_fan: star does not biject with quotient cones");
        q.parent_cone[static_cast<size_t>(qi)] = t;
        q.quotient_index[static_cast<size_t>(t)] = qi;

        // Transport the orientation: a lift of the quotient basis followed by
        // the basis of sigma must be positively oriented in tau's basis.
        const IntMatrix& tau_basis = fan.cone(t).oriented_basis();
        IntMatrix sigma_coords = solve_integral(tau_basis, sig.oriented_basis());
        IntMatrix lift_coords =
            solve_integral(IntMatrix(projection * tau_basis), q.fan.cone(qi).oriented_basis());
        int s0 = sign_of(determinant(hcat(lift_coords, sigma_coords)));
        if (s0 == 0)
            throw InvariantError("quotient_fan: degenerate orientation transport");
        signs[static_cast<size_t>(qi)] = s0 * fan.cone(t).orientation() * sig.orientation();
    }
    q.fan = q.fan.with_orientations(signs);
    return q;
}

}  // namespace toric
