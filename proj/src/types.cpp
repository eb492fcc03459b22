#include "fsrec/types.hpp"

#include <algorithm>
#include <numeric>

#include "fsrec/errors.hpp"

namespace fsrec {

namespace {

std::string join(std::span<const int> values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(values[i]);
    }
    out += ')';
    return out;
}

void compositions_rec(int rank, int remaining, std::vector<int>& prefix,
                      std::vector<LevelComposition>& out) {
    if (static_cast<int>(prefix.size()) == rank) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        prefix.push_back(v);
        compositions_rec(rank, remaining - v, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

LevelComposition::LevelComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2)
        throw InvalidArgumentError("composition needs at least two parts (rank >= 1)");
    if (std::any_of(parts_.begin(), parts_.end(), [](int k) { return k < 0; }))
        throw InvalidArgumentError("composition parts must be nonnegative: " + join(parts_));
}

int LevelComposition::level() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int LevelComposition::partial_sum(int j) const {
    return std::accumulate(parts_.begin(), parts_.begin() + j + 1, 0);
}

std::string LevelComposition::to_string() const { return join(parts_); }

std::vector<LevelComposition> compositions_of(int rank, int level) {
    if (rank < 1) throw InvalidArgumentError("rank must be >= 1");
    if (level < 0) throw InvalidArgumentError("level must be >= 0");
    std::vector<LevelComposition> out;
    std::vector<int> prefix;
    compositions_rec(rank, level, prefix, out);
    return out;
}

Configuration::Configuration(std::vector<int> entries) : entries_(std::move(entries)) {
    if (std::any_of(entries_.begin(), entries_.end(), [](int a) { return a < 0; }))
        throw InvalidArgumentError("configuration entries must be nonnegative");
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

int Configuration::at(int position) const {
    return position < size() ? entries_[position] : 0;
}

int Configuration::particle_count() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string Configuration::to_string() const { return join(entries_); }

WeightVector::WeightVector(std::vector<int> components) : components_(std::move(components)) {}

WeightVector WeightVector::zero(int rank) { return WeightVector(std::vector<int>(rank, 0)); }

int WeightVector::total() const {
    return std::accumulate(components_.begin(), components_.end(), 0);
}

bool WeightVector::is_nonnegative() const {
    return std::all_of(components_.begin(), components_.end(), [](int n) { return n >= 0; });
}

std::string WeightVector::to_string() const { return join(components_); }

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
    if (a.size() != b.size()) throw RankMismatchError("weight vectors of different rank");
    std::vector<int> c(a.components_);
    for (int i = 0; i < a.size(); ++i) c[i] += b.components_[i];
    return WeightVector(std::move(c));
}

WeightVector operator-(const WeightVector& a, const WeightVector& b) {
    if (a.size() != b.size()) throw RankMismatchError("weight vectors of different rank");
    std::vector<int> c(a.components_);
    for (int i = 0; i < a.size(); ++i) c[i] -= b.components_[i];
    return WeightVector(std::move(c));
}

std::strong_ordering WeightVector::operator<=>(const WeightVector& other) const {
    if (auto c = total() <=> other.total(); c != 0) return c;
    return components_ <=> other.components_;
}

std::strong_ordering Grade::operator<=>(const Grade& other) const {
    if (auto c = degree <=> other.degree; c != 0) return c;
    return weight <=> other.weight;
}

std::vector<WeightVector> weights_up_to(int rank, int max_total) {
    std::vector<WeightVector> out;
    std::vector<int> current(rank, 0);
    // odometer over all vectors with total <= max_total
    while (true) {
        out.emplace_back(current);
        int i = rank - 1;
        while (i >= 0) {
            ++current[i];
            if (std::accumulate(current.begin(), current.end(), 0) <= max_total) break;
            current[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fsrec
