#include "eulersum/euler_table.hpp"

#include <fstream>
#include <istream>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/parser.hpp"

namespace eulersum {

namespace {

struct HarmonicCache {
    std::shared_mutex mutex;
    std::vector<Rational> values{Rational(0)};
};

HarmonicCache& harmonic_cache() {
    static HarmonicCache cache;
    return cache;
}

struct PartialCache {
    std::shared_mutex mutex;
    std::map<std::pair<int, int>, std::vector<Rational>> prefix;
};

PartialCache& partial_cache() {
    static PartialCache cache;
    return cache;
}

}  // namespace

Rational harmonic(long m) {
    if (m < 0) throw std::invalid_argument("harmonic: negative index");
    auto& cache = harmonic_cache();
    const auto idx = static_cast<std::size_t>(m);
    {
        std::shared_lock lock(cache.mutex);
        if (idx < cache.values.size()) return cache.values[idx];
    }
    std::unique_lock lock(cache.mutex);
    while (cache.values.size() <= idx) {
        const long j = static_cast<long>(cache.values.size());
        cache.values.push_back(cache.values.back() + Rational(1, j));
    }
    return cache.values[idx];
}

Rational partial_euler(int hexp, int npow, long m) {
    if (hexp < 0 || npow < 1 || m < 0) throw std::invalid_argument("partial_euler: invalid arguments");
    auto& cache = partial_cache();
    const auto idx = static_cast<std::size_t>(m);
    const std::pair key{hexp, npow};
    {
        std::shared_lock lock(cache.mutex);
        const auto it = cache.prefix.find(key);
        if (it != cache.prefix.end() && idx < it->second.size()) return it->second[idx];
    }
    // harmonic() takes its own lock, so gather its values before locking here.
    std::vector<Rational> h;
    for (long j = 0; j <= m; ++j) h.push_back(harmonic(j));
    std::unique_lock lock(cache.mutex);
    auto& prefix = cache.prefix[key];
    if (prefix.empty()) prefix.emplace_back(0);
    while (prefix.size() <= idx) {
        const long j = static_cast<long>(prefix.size());
        prefix.push_back(prefix.back() + h[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(hexp)) /
                                             Rational(j).pow(static_cast<unsigned>(npow)));
    }
    return prefix[idx];
}

ClosedForm euler_linear(int npow) {
    if (npow < 2) throw std::invalid_argument("euler_linear: n must be >= 2");
    ClosedForm out = ClosedForm::zeta(npow + 1, Rational(npow, 2) + Rational(1));
    for (int j = 1; j <= npow - 2; ++j) {
        const int a = npow - j, b = j + 1;
        if (a % 2 == 0 && b % 2 == 0) {
            // both factors are rational multiples of powers of pi, so the pair is one of zeta(n+1)
            const Rational ratio = even_zeta_pi_coefficient(a) * even_zeta_pi_coefficient(b) /
                                   even_zeta_pi_coefficient(npow + 1);
            out -= ClosedForm::zeta(npow + 1, ratio / Rational(2));
        } else {
            out -= ClosedForm::monomial(ZetaMonomial({a, b}), Rational(1, 2));
        }
    }
    return out;
}

EulerTable::EulerTable() {
    entries_[{2, 2}] = ClosedForm::zeta(4, Rational(17, 4));
    entries_[{3, 3}] = ClosedForm::zeta(6, Rational(93, 16)) -
                       ClosedForm::monomial(ZetaMonomial({3, 3}), Rational(5, 2));
    entries_[{4, 4}] = ClosedForm::zeta(8, Rational(13559, 144)) -
                       ClosedForm::monomial(ZetaMonomial({3, 5}), Rational(92)) -
                       ClosedForm::monomial(ZetaMonomial({2, 3, 3}), Rational(2)) +
                       ClosedForm::symbolic({SumKind::Generalized, 2, 6}, Rational(26));
}

std::optional<ClosedForm> EulerTable::lookup(EulerSumKey key) const {
    if (key.npow < 2) throw std::invalid_argument("E(l, n) diverges for n < 2");
    if (key.hexp == 0) return ClosedForm::zeta(key.npow);
    if (key.hexp == 1) return euler_linear(key.npow);
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void EulerTable::set(EulerSumKey key, ClosedForm value) {
    if (key.npow < 2) throw std::invalid_argument("table entry E(l, n) needs n >= 2");
    if (key.hexp <= 1) throw std::invalid_argument("E(0, n) and E(1, n) are fixed by formula");
    entries_[key] = std::move(value);
}

void EulerTable::load(std::istream& in) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        std::istringstream head(line.substr(0, eq == std::string::npos ? line.size() : eq));
        std::string tag;
        int l = -1;
        int n = -1;
        std::string rest;
        if (eq == std::string::npos || !(head >> tag >> l >> n) || tag != "E" || (head >> rest))
            throw ParseError("table line " + std::to_string(lineno) + ": expected 'E <l> <n> = <closed form>'",
                             first);
        try {
            set({l, n}, parse_closed_form(line.substr(eq + 1)));
        } catch (const ParseError& e) {
            throw ParseError("table line " + std::to_string(lineno) + ": " + e.what(), eq + 1 + e.position());
        } catch (const std::invalid_argument& e) {
            throw ParseError("table line " + std::to_string(lineno) + ": " + e.what(), first);
        }
    }
}

void EulerTable::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file " + path.string());
    load(in);
}

}  // namespace eulersum
