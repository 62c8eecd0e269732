#include "cognum/counting.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "cognum/error.hpp"

namespace cognum::counting {

FiniteSet subset_successor(FiniteSet s) { return FiniteSet{s.size + 1}; }

std::vector<std::string> number_words(std::size_t count) {
    static const std::array<const char*, 20> english = {
        "one",     "two",     "three",     "four",     "five",    "six",      "seven",
        "eight",   "nine",    "ten",       "eleven",   "twelve",  "thirteen", "fourteen",
        "fifteen", "sixteen", "seventeen", "eighteen", "nineteen", "twenty"};
    std::vector<std::string> words;
    for (std::size_t i = 0; i < count; ++i) {
        words.emplace_back(i < english.size() ? english[i] : std::to_string(i + 1));
    }
    return words;
}

Curriculum::Curriculum(std::vector<std::string> words, std::size_t objects)
    : words_(std::move(words)), objects_(objects) {
    if (words_.empty()) throw DomainError("InvalidCurriculum", "no number words");
    std::set<std::string> seen;
    for (const auto& w : words_) {
        if (!seen.insert(w).second) {
            throw DomainError("InvalidCurriculum", "number word '" + w + "' repeats");
        }
    }
    if (objects_ < words_.size()) {
        throw DomainError("InvalidCurriculum", "fewer objects than number words");
    }
}

Curriculum Curriculum::standard(std::size_t vocabulary) {
    return Curriculum(number_words(vocabulary), vocabulary);
}

std::string Answer::to_string() const {
    return word ? *word : "more-than(" + std::to_string(more_than) + ")";
}

bool check(std::size_t word_index, FiniteSet s) { return word_index == s.size; }

Learner::Learner(Curriculum curriculum, LearnerConfig config)
    : curriculum_(std::move(curriculum)), config_(config), rng_(config.seed) {
    if (config_.leap_threshold < 1 || config_.leap_threshold > curriculum_.vocabulary()) {
        throw DomainError("InvalidThreshold",
                          "leap threshold " + std::to_string(config_.leap_threshold) +
                              " outside 1.." + std::to_string(curriculum_.vocabulary()));
    }
}

std::vector<std::size_t> Learner::candidate_sizes() {
    const std::size_t first = knower_level_ + 1;
    const std::size_t all = curriculum_.objects();
    std::vector<std::size_t> sizes;
    // Above "one", an unlearned word is first read as "more than k": the whole collection.
    if (knower_level_ >= 1 && all != first) sizes.push_back(all);
    const std::size_t head = sizes.size();
    for (std::size_t n = first; n <= all; ++n) {
        if (head == 0 || n != all) sizes.push_back(n);
    }
    if (config_.schedule == Schedule::seeded) {
        std::shuffle(sizes.begin() + static_cast<std::ptrdiff_t>(head), sizes.end(), rng_);
    }
    return sizes;
}

StepEvent Learner::step() {
    if (leaped_) throw DomainError("AlreadyConverged", "the learner has already taken the leap");

    const std::size_t word_index = knower_level_ + 1;
    StepEvent event;
    event.word = curriculum_.words()[word_index - 1];

    for (std::size_t size : candidate_sizes()) {
        const bool verdict = check(word_index, FiniteSet{size});
        ++event.proposals;
        if (verdict) knower_level_ = word_index;
        log_.push_back({log_.size() + 1, event.word, size, verdict, knower_level_});
        if (verdict) {
            event.accepted_size = size;
            break;
        }
    }
    if (knower_level_ >= config_.leap_threshold) leaped_ = true;
    event.knower_level = knower_level_;
    event.leaped = leaped_;
    return event;
}

std::size_t Learner::run_to_convergence() {
    std::size_t steps = 0;
    while (!leaped_) {
        step();
        ++steps;
    }
    return steps;
}

Answer Learner::query(FiniteSet s) const {
    if (s.size == 0) throw DomainError("InvalidSet", "cannot name an empty set");
    if (leaped_) {
        if (s.size > curriculum_.vocabulary()) {
            throw DomainError("SizeBeyondVocabulary", "no word for " + std::to_string(s.size) +
                                                          " objects");
        }
        return Answer{curriculum_.words()[s.size - 1], 0};
    }
    if (s.size <= knower_level_) return Answer{curriculum_.words()[s.size - 1], 0};
    return Answer{std::nullopt, knower_level_};
}

bool Learner::check(std::size_t word_index, FiniteSet s) const {
    if (word_index < 1 || word_index > curriculum_.vocabulary()) {
        throw DomainError("InvalidWordIndex", "word index " + std::to_string(word_index) +
                                                  " outside the vocabulary");
    }
    return counting::check(word_index, s);
}

std::size_t Learner::proposal_bound(const Curriculum& curriculum, std::size_t threshold) {
    std::size_t bound = 0;
    for (std::size_t k = 0; k < threshold; ++k) bound += curriculum.objects() - k;
    return bound;
}

std::size_t learner_addition(std::size_t n, std::size_t m, std::size_t vocabulary) {
    const FiniteSet limit{vocabulary};
    auto grow = [&](FiniteSet s) {
        if (s >= limit) {
            throw DomainError("OutOfRange", "sum exceeds the vocabulary of " +
                                                std::to_string(vocabulary) + " words");
        }
        return subset_successor(s);
    };

    FiniteSet sum{};
    for (FiniteSet left{}; left < FiniteSet{n};) {
        left = subset_successor(left);
        sum = grow(sum);
    }
    // Each token of the second set extends the union by one.
    for (FiniteSet right{}; right < FiniteSet{m};) {
        right = subset_successor(right);
        sum = grow(sum);
    }
    return sum.size;
}

}  // namespace cognum::counting
