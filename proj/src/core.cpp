#include "nucleonsim/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace nsim {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

bool finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

std::string to_decimal(double value) {
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

// --- Operator ---

Operator::Operator(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {
    require(dim == 3 || is_power_of_two(dim), "Operator dimension must be a power of two or 3");
}

Operator::Operator(int dim, std::vector<cplx> entries) : Operator(dim) {
    require(entries.size() == static_cast<std::size_t>(dim) * dim,
            "Operator entry count does not match dimension");
    for (const cplx& z : entries) require(finite(z), "Operator entries must be finite");
    entries_ = std::move(entries);
}

Operator Operator::identity(int dim) {
    Operator op(dim);
    for (int i = 0; i < dim; ++i) op.at(i, i) = 1.0;
    return op;
}

Operator Operator::adjoint() const {
    Operator out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

Operator Operator::operator*(const Operator& rhs) const {
    require(dim_ == rhs.dim_, "Operator product dimension mismatch");
    Operator out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int k = 0; k < dim_; ++k) {
            const cplx a = at(r, k);
            if (a == cplx{}) continue;
            for (int c = 0; c < dim_; ++c) out.at(r, c) += a * rhs.at(k, c);
        }
    return out;
}

bool Operator::is_unitary(double tol) const {
    const Operator product = adjoint() * (*this);
    return product.max_abs_diff(identity(dim_)) < tol;
}

bool Operator::is_hermitian(double tol) const { return max_abs_diff(adjoint()) < tol; }

double Operator::max_abs_diff(const Operator& other) const {
    require(dim_ == other.dim_, "Operator comparison dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    return worst;
}

// --- StateVector ---

StateVector::StateVector(int num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    require(num_qubits >= 1, "StateVector needs at least one qubit");
    require(amplitudes_.size() == (std::size_t{1} << num_qubits),
            "StateVector amplitude count must be 2^num_qubits");
    double norm2 = 0.0;
    for (const cplx& a : amplitudes_) {
        require(finite(a), "StateVector amplitudes must be finite");
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) >= kDefaultTol)
        throw std::invalid_argument("StateVector is not normalized");
}

StateVector StateVector::zero_state(int num_qubits) { return basis_state(num_qubits, 0); }

StateVector StateVector::basis_state(int num_qubits, std::size_t index) {
    if (num_qubits < 1 || index >= (std::size_t{1} << num_qubits))
        throw std::out_of_range("basis_state index out of range");
    std::vector<cplx> amps(std::size_t{1} << num_qubits);
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

// --- DensityMatrix ---

DensityMatrix::DensityMatrix(int num_qubits, std::vector<cplx> entries)
    : num_qubits_(num_qubits), dim_(std::size_t{1} << num_qubits), entries_(std::move(entries)) {
    require(num_qubits >= 1, "DensityMatrix needs at least one qubit");
    require(entries_.size() == dim_ * dim_, "DensityMatrix entry count must be 4^num_qubits");
    double tr = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        const cplx d = at(r, r);
        require(d.real() > -kDefaultTol && std::abs(d.imag()) < kDefaultTol,
                "DensityMatrix diagonal must be real nonnegative");
        tr += d.real();
        for (std::size_t c = r + 1; c < dim_; ++c)
            require(std::abs(at(r, c) - std::conj(at(c, r))) < kDefaultTol,
                    "DensityMatrix must be Hermitian");
    }
    require(std::abs(tr - 1.0) < kDefaultTol, "DensityMatrix trace must be 1");
}

double DensityMatrix::trace() const {
    double tr = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) tr += at(r, r).real();
    return tr;
}

double DensityMatrix::purity() const {
    // tr(rho^2) = sum |rho_rc|^2 for Hermitian rho
    double sum = 0.0;
    for (const cplx& z : entries_) sum += std::norm(z);
    return sum;
}

double DensityMatrix::max_imag_entry() const {
    double worst = 0.0;
    for (const cplx& z : entries_) worst = std::max(worst, std::abs(z.imag()));
    return worst;
}

std::vector<cplx> DensityMatrix::apply(const std::vector<cplx>& v) const {
    require(v.size() == dim_, "DensityMatrix apply dimension mismatch");
    std::vector<cplx> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out[r] += at(r, c) * v[c];
    return out;
}

// --- Observable ---

Operator Observable::to_operator() const {
    const std::size_t dim = std::size_t{1} << num_qubits;
    Operator out(static_cast<int>(dim));
    for (const Term& term : terms) {
        for (const Factor& f : term) {
            require(f.qubit >= 1 && f.qubit <= num_qubits, "Observable factor qubit out of range");
            require(f.matrix.dim() == 2, "Observable factors must be 2x2");
        }
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                // nonzero only when r and c agree outside the factor qubits
                cplx value = 1.0;
                std::size_t touched = 0;
                for (const Factor& f : term) {
                    const int shift = num_qubits - f.qubit;
                    touched |= std::size_t{1} << shift;
                    value *= f.matrix.at(static_cast<int>((r >> shift) & 1u),
                                         static_cast<int>((c >> shift) & 1u));
                }
                if ((r & ~touched) != (c & ~touched)) continue;
                out.at(static_cast<int>(r), static_cast<int>(c)) += value;
            }
    }
    return out;
}

// --- operations ---

StateVector apply_gate(const StateVector& state, const Operator& local,
                       const std::vector<int>& targets, const std::vector<ControlSpec>& controls) {
    const int n = state.num_qubits();
    require(!targets.empty(), "apply_gate needs at least one target");
    std::vector<int> seen;
    for (int t : targets) {
        if (t < 1 || t > n) throw std::out_of_range("target qubit index out of range");
        require(std::find(seen.begin(), seen.end(), t) == seen.end(), "duplicate target qubit");
        seen.push_back(t);
    }
    for (const ControlSpec& c : controls) {
        if (c.qubit < 1 || c.qubit > n) throw std::out_of_range("control qubit index out of range");
        require(c.polarity == 0 || c.polarity == 1, "control polarity must be 0 or 1");
        require(std::find(seen.begin(), seen.end(), c.qubit) == seen.end(),
                "control qubit overlaps another control or target");
        seen.push_back(c.qubit);
    }
    const std::size_t block = std::size_t{1} << targets.size();
    require(local.dim() == static_cast<int>(block), "local operator dim must be 2^|targets|");
    require(local.is_unitary(), "local operator must be unitary");

    const std::size_t dim = state.dim();
    std::vector<std::size_t> target_bit(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i)
        target_bit[i] = std::size_t{1} << (n - targets[i]);

    std::vector<cplx> out(state.amplitudes());
    for (std::size_t base = 0; base < dim; ++base) {
        bool skip = false;
        for (std::size_t i = 0; i < targets.size() && !skip; ++i)
            if (base & target_bit[i]) skip = true;  // enumerate target bits from zero
        if (skip) continue;
        bool active = true;
        for (const ControlSpec& c : controls)
            if (((base >> (n - c.qubit)) & 1u) != static_cast<unsigned>(c.polarity)) {
                active = false;
                break;
            }
        if (!active) continue;

        std::vector<std::size_t> idx(block);
        for (std::size_t r = 0; r < block; ++r) {
            std::size_t v = base;
            for (std::size_t i = 0; i < targets.size(); ++i)
                if ((r >> (targets.size() - 1 - i)) & 1u) v |= target_bit[i];
            idx[r] = v;
        }
        for (std::size_t r = 0; r < block; ++r) {
            cplx acc = 0.0;
            for (std::size_t c = 0; c < block; ++c)
                acc += local.at(static_cast<int>(r), static_cast<int>(c)) *
                       state.amplitude(idx[c]);
            out[idx[r]] = acc;
        }
    }
    return StateVector(n, std::move(out));  // re-validates the norm
}

DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep) {
    const int n = state.num_qubits();
    require(!keep.empty(), "partial_trace keep list must be non-empty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 1 || keep[i] > n) throw std::out_of_range("keep qubit index out of range");
        require(i == 0 || keep[i] > keep[i - 1], "keep list must be strictly increasing");
    }
    const int k = static_cast<int>(keep.size());
    const std::size_t kept_dim = std::size_t{1} << k;

    std::vector<int> env;
    for (int q = 1; q <= n; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) env.push_back(q);
    const std::size_t env_dim = std::size_t{1} << env.size();

    auto full_index = [&](std::size_t kept, std::size_t e) {
        std::size_t idx = 0;
        for (int i = 0; i < k; ++i)
            if ((kept >> (k - 1 - i)) & 1u) idx |= std::size_t{1} << (n - keep[i]);
        for (std::size_t i = 0; i < env.size(); ++i)
            if ((e >> (env.size() - 1 - i)) & 1u) idx |= std::size_t{1} << (n - env[i]);
        return idx;
    };

    std::vector<cplx> rho(kept_dim * kept_dim);
    for (std::size_t r = 0; r < kept_dim; ++r)
        for (std::size_t c = 0; c < kept_dim; ++c) {
            cplx acc = 0.0;
            for (std::size_t e = 0; e < env_dim; ++e)
                acc += state.amplitude(full_index(r, e)) *
                       std::conj(state.amplitude(full_index(c, e)));
            rho[r * kept_dim + c] = acc;
        }
    return DensityMatrix(k, std::move(rho));
}

double fidelity(const StateVector& a, const StateVector& b) {
    require(a.num_qubits() == b.num_qubits(), "fidelity dimension mismatch");
    cplx overlap = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        overlap += std::conj(a.amplitude(i)) * b.amplitude(i);
    return std::norm(overlap);
}

double expectation(const StateVector& state, const Operator& hermitian) {
    require(hermitian.dim() == static_cast<int>(state.dim()), "expectation dimension mismatch");
    require(hermitian.is_hermitian(), "expectation requires a Hermitian operator");
    cplx acc = 0.0;
    for (std::size_t r = 0; r < state.dim(); ++r) {
        cplx row = 0.0;
        for (std::size_t c = 0; c < state.dim(); ++c)
            row += hermitian.at(static_cast<int>(r), static_cast<int>(c)) * state.amplitude(c);
        acc += std::conj(state.amplitude(r)) * row;
    }
    if (std::abs(acc.imag()) >= kDefaultTol)
        throw std::invalid_argument("expectation value has a non-negligible imaginary part");
    return acc.real();
}

double expectation(const StateVector& state, const Observable& obs) {
    require(obs.num_qubits == state.num_qubits(), "expectation dimension mismatch");
    return expectation(state, obs.to_operator());
}

std::optional<cplx> relative_phase(const StateVector& a, const StateVector& b, double tol) {
    require(a.num_qubits() == b.num_qubits(), "phase comparison dimension mismatch");
    std::size_t pivot = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (std::abs(b.amplitude(i)) > best) {
            best = std::abs(b.amplitude(i));
            pivot = i;
        }
    if (best == 0.0) return std::nullopt;
    cplx c = a.amplitude(pivot) / b.amplitude(pivot);
    const double mag = std::abs(c);
    if (mag < 0.5) return std::nullopt;  // nowhere near a unit phase
    c /= mag;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (std::abs(a.amplitude(i) - c * b.amplitude(i)) >= tol) return std::nullopt;
    return c;
}

bool phase_equivalent(const StateVector& a, const StateVector& b, double tol) {
    return relative_phase(a, b, tol).has_value();
}

std::string dump_state(const StateVector& state) {
    std::ostringstream out;
    const int n = state.num_qubits();
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const cplx amp = state.amplitude(i);
        if (std::abs(amp) < 1e-14) continue;
        std::string label(n, '0');
        for (int q = 1; q <= n; ++q)
            if ((i >> (n - q)) & 1u) label[q - 1] = '1';
        out << label << ' ' << to_decimal(amp.real()) << ' ' << to_decimal(amp.imag()) << '\n';
    }
    return out.str();
}

}  // namespace nsim
