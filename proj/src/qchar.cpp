#include <qfusion/qchar.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qfusion {

QPoly QPoly::one() {
    QPoly p;
    p.c.emplace(0, 1);
    return p;
}

void QPoly::add(long long exp, long long coeff) {
    if (coeff == 0) return;
    auto it = c.find(exp);
    if (it == c.end()) {
        c.emplace(exp, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) c.erase(it);
}

long long QPoly::coeff(long long exp) const {
    auto it = c.find(exp);
    return it == c.end() ? 0 : it->second;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r = *this;
    for (const auto& [e, k] : o.c) r.add(e, k);
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    for (const auto& [ea, ka] : c)
        for (const auto& [eb, kb] : o.c) r.add(ea + eb, ka * kb);
    return r;
}

QPoly qfactorial(int k) {
    QPoly r = QPoly::one();
    for (int i = 1; i <= k; ++i) {
        QPoly f = QPoly::one();
        f.add(i, -1);
        r = r * f;
    }
    return r;
}

QPoly qbinomial(int m, int k) {
    if (k < 0 || m < 0 || k > m) return QPoly{};
    std::vector<QPoly> row(1, QPoly::one());  // [0,0]
    for (int i = 1; i <= m; ++i) {
        std::vector<QPoly> next(i + 1);
        for (int j = 0; j <= i; ++j) {
            QPoly v;
            if (j <= i - 1) {
                QPoly qk;
                qk.add(j, 1);
                v = v + qk * row[j];
            }
            if (j >= 1) v = v + row[j - 1];
            next[j] = std::move(v);
        }
        row = std::move(next);
    }
    return row[k];
}

void CharTable::add(long long k, long long s, long long v) {
    if (v == 0) return;
    auto key = std::make_pair(k, s);
    auto it = e.find(key);
    if (it == e.end()) {
        e.emplace(key, v);
        return;
    }
    it->second += v;
    if (it->second == 0) e.erase(it);
}

long long CharTable::at(long long k, long long s) const {
    auto it = e.find({k, s});
    return it == e.end() ? 0 : it->second;
}

long long CharTable::total() const {
    long long t = 0;
    for (const auto& [ks, v] : e) t += v;
    return t;
}

long long CharTable::max_z() const {
    long long m = -1;
    for (const auto& [ks, v] : e) m = std::max(m, ks.first);
    return m;
}

long long CharTable::max_q() const {
    long long m = -1;
    for (const auto& [ks, v] : e) m = std::max(m, ks.second);
    return m;
}

CharTable CharTable::window(long long zmax, long long smax) const {
    CharTable w;
    for (const auto& [ks, v] : e)
        if (ks.first <= zmax && ks.second <= smax) w.e.emplace(ks, v);
    return w;
}

std::string CharTable::to_tsv() const {
    std::string out = "k\ts\tdim\n";
    for (const auto& [ks, v] : e)
        out += std::to_string(ks.first) + "\t" + std::to_string(ks.second) + "\t" +
               std::to_string(v) + "\n";
    return out;
}

std::vector<long long> profile(const std::vector<int>& A) {
    int mx = 0;
    for (int a : A) {
        if (a < 1) throw std::invalid_argument("profile: entries must be >= 1");
        mx = std::max(mx, a);
    }
    std::vector<long long> b(mx, 0);
    for (int a : A) ++b[a - 1];
    return b;
}

namespace {

std::mutex rec_mutex;
std::map<std::vector<int>, CharTable> rec_memo;

CharTable char_recurrence_sorted(const std::vector<int>& A) {
    if (A.empty()) {
        CharTable t;
        t.add(0, 0, 1);
        return t;
    }
    if (A.front() == 0) return CharTable{};  // sorted, so a zero sits first

    {
        std::lock_guard<std::mutex> g(rec_mutex);
        auto it = rec_memo.find(A);
        if (it != rec_memo.end()) return it->second;
    }

    const int n = (int)A.size();
    std::vector<int> dropped(A.begin(), A.end() - 1);
    std::vector<int> decremented = A;
    --decremented.back();
    std::sort(decremented.begin(), decremented.end());

    CharTable t = char_recurrence_sorted(dropped);
    const CharTable sub = char_recurrence_sorted(decremented);
    for (const auto& [ks, v] : sub.e) t.add(ks.first + 1, ks.second + n - 1, v);

    std::lock_guard<std::mutex> g(rec_mutex);
    return rec_memo.emplace(A, std::move(t)).first->second;
}

}  // namespace

CharTable char_recurrence(std::vector<int> A) {
    for (int a : A)
        if (a < 0) throw std::invalid_argument("char_recurrence: negative entry");
    std::sort(A.begin(), A.end());
    return char_recurrence_sorted(A);
}

CharTable char_closed_form(const std::vector<long long>& b) {
    if (b.empty() || b.back() <= 0)
        throw std::invalid_argument("char_closed_form: profile must end with a positive count");
    const int s = (int)b.size();

    // prefix[l] = b_1 + ... + b_l
    std::vector<long long> prefix(s + 1, 0);
    for (int l = 1; l <= s; ++l) prefix[l] = prefix[l - 1] + b[l - 1];

    CharTable normalized;

    // Descend l = s-1 .. 1 picking j_l <= b_{l+1} + j_{l+1}; weight
    // z^{sum j_l} q^{sum j_l (prefix_l + j_l)} times the binomial product.
    struct Frame {
        int l;
        long long j_next, zexp, qexp;
        QPoly coeff;
    };
    auto emit = [&normalized](long long zexp, long long qexp, const QPoly& coeff) {
        for (const auto& [e, k] : coeff.c) normalized.add(zexp, qexp + e, k);
    };

    if (s == 1) {
        normalized.add(0, 0, 1);  // no summation indices: the empty product
    } else {
        std::vector<Frame> stack;
        stack.push_back({s - 1, 0, 0, 0, QPoly::one()});
        while (!stack.empty()) {
            Frame f = std::move(stack.back());
            stack.pop_back();
            const long long hi = b[f.l] + f.j_next;  // b_{l+1} + j_{l+1}
            for (long long j = 0; j <= hi; ++j) {
                QPoly c = f.coeff * qbinomial((int)hi, (int)j);
                if (c.c.empty()) continue;
                const long long zexp = f.zexp + j;
                const long long qexp = f.qexp + j * (prefix[f.l] + j);
                if (f.l == 1)
                    emit(zexp, qexp, c);
                else
                    stack.push_back({f.l - 1, j, zexp, qexp, std::move(c)});
            }
        }
    }

    // Series computes ch(.., q, zq); store plain (q,z).
    CharTable plain;
    for (const auto& [ks, v] : normalized.e) plain.add(ks.first, ks.second - ks.first, v);
    return plain;
}

namespace {

// Coefficients of prod_{i=1}^{n} 1/(1-q^i) through q^cap.
std::vector<long long> inv_pochhammer(int n, long long cap) {
    std::vector<long long> v(cap + 1, 0);
    v[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (long long j = i; j <= cap; ++j) v[j] += v[j - i];
    return v;
}

void enumerate_modes(int k, long long zmax, std::vector<long long>& n, int i,
                     long long zd, std::vector<std::vector<long long>>& out) {
    if (i == k) {
        out.push_back(n);
        return;
    }
    for (long long v = 0; zd + i * v <= zmax; ++v) {
        n[i - 1] = v;
        enumerate_modes(k, zmax, n, i + 1, zd + i * v, out);
    }
    n[i - 1] = 0;
}

}  // namespace

CharTable gordon_truncated(int k, long long zmax, long long smax) {
    if (k < 1) throw std::invalid_argument("gordon_truncated: k >= 1");
    CharTable plain;

    std::vector<std::vector<long long>> modes;
    std::vector<long long> n(k - 1, 0);
    if (k == 1) {
        modes.push_back({});
    } else {
        enumerate_modes(k, zmax, n, 1, 0, modes);
    }

    for (const auto& N : modes) {
        long long zd = 0;
        for (int i = 1; i <= k - 1; ++i) zd += (long long)i * N[i - 1];

        long long B = 0;
        for (int i = 1; i <= k - 1; ++i)
            for (int j = 1; j <= k - 1; ++j) B += (long long)std::min(i, j) * N[i - 1] * N[j - 1];
        long long B2 = 0;
        for (int l = 1; l <= k - 1; ++l) {
            long long partial = 0;
            for (int m = k - l; m <= k - 1; ++m) partial += N[m - 1];
            B2 += partial * partial;
        }
        if (B != B2) throw std::logic_error("gordon_truncated: exponent forms disagree");

        // Normalized q-degree of a term is B - zd + j with j >= 0.
        if (B - zd > smax) continue;
        const long long cap = smax + zd - B;

        std::vector<long long> series(cap + 1, 0);
        series[0] = 1;
        for (int i = 1; i <= k - 1; ++i) {
            if (N[i - 1] == 0) continue;
            std::vector<long long> f = inv_pochhammer((int)N[i - 1], cap);
            std::vector<long long> conv(cap + 1, 0);
            for (long long a = 0; a <= cap; ++a) {
                if (series[a] == 0) continue;
                for (long long bq = 0; a + bq <= cap; ++bq) conv[a + bq] += series[a] * f[bq];
            }
            series = std::move(conv);
        }
        for (long long j = 0; j <= cap; ++j)
            if (series[j] != 0) plain.add(zd, B + j - zd, series[j]);
    }
    return plain;
}

}  // namespace qfusion
