#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cognum::counting {

/// A collection of indistinguishable tokens; only its size is observable.
struct FiniteSet {
    std::size_t size = 0;
    auto operator<=>(const FiniteSet&) const = default;
};

/// S(s): the set with one more token.
FiniteSet subset_successor(FiniteSet s);

/// English number words "one" .. "twenty"; larger positions fall back to digits.
std::vector<std::string> number_words(std::size_t count);

/// The recited count list and the number of tokens available for trials.
class Curriculum {
public:
    /// Throws DomainError "InvalidCurriculum" on an empty or repeating word list,
    /// or fewer objects than words.
    Curriculum(std::vector<std::string> words, std::size_t objects);

    static Curriculum standard(std::size_t vocabulary);

    const std::vector<std::string>& words() const noexcept { return words_; }
    std::size_t objects() const noexcept { return objects_; }
    std::size_t vocabulary() const noexcept { return words_.size(); }

    bool operator==(const Curriculum&) const = default;

private:
    std::vector<std::string> words_;
    std::size_t objects_;
};

enum class Schedule { deterministic, seeded };

struct LearnerConfig {
    std::size_t leap_threshold = 3;
    Schedule schedule = Schedule::deterministic;
    std::uint64_t seed = 0;
};

/// Either an exact number word or the pre-leap reading "more than k".
struct Answer {
    std::optional<std::string> word;
    std::size_t more_than = 0;

    std::string to_string() const;
    bool operator==(const Answer&) const = default;
};

struct LogEntry {
    std::size_t step = 0;  // 1-based proposal counter
    std::string word;
    std::size_t set_size = 0;
    bool verdict = false;
    std::size_t knower_level = 0;  // after the verdict

    bool operator==(const LogEntry&) const = default;
};

struct StepEvent {
    std::string word;
    std::size_t accepted_size = 0;
    std::size_t proposals = 0;
    std::size_t knower_level = 0;
    bool leaped = false;
};

/// True iff the word at 1-based position `word_index` names the size of s.
bool check(std::size_t word_index, FiniteSet s);

/// Knower-level state machine. Each step acquires the next word by proposing
/// candidate sets, checking each against the true cardinality and logging the
/// verdict, until one is accepted. Reaching the leap threshold switches the
/// learner to the full word/size correspondence.
class Learner {
public:
    /// Throws DomainError "InvalidThreshold" unless 1 <= threshold <= vocabulary.
    Learner(Curriculum curriculum, LearnerConfig config = {});

    std::size_t knower_level() const noexcept { return knower_level_; }
    std::size_t leap_threshold() const noexcept { return config_.leap_threshold; }
    bool leaped() const noexcept { return leaped_; }
    const Curriculum& curriculum() const noexcept { return curriculum_; }
    const std::vector<LogEntry>& association_log() const noexcept { return log_; }

    /// Throws DomainError "AlreadyConverged" after the leap.
    StepEvent step();

    /// Steps until the leap; returns the number of steps taken.
    std::size_t run_to_convergence();

    /// Throws "InvalidSet" for an empty set and "SizeBeyondVocabulary" when a
    /// leaped learner is shown more tokens than it has words.
    Answer query(FiniteSet s) const;

    /// check() with the word-index range validated ("InvalidWordIndex").
    bool check(std::size_t word_index, FiniteSet s) const;

    /// Upper bound on log entries before the leap under either schedule.
    static std::size_t proposal_bound(const Curriculum& curriculum, std::size_t threshold);

private:
    std::vector<std::size_t> candidate_sizes();

    Curriculum curriculum_;
    LearnerConfig config_;
    std::mt19937_64 rng_;
    std::size_t knower_level_ = 0;
    bool leaped_ = false;
    std::vector<LogEntry> log_;
};

/// n + m as the size of a disjoint union, built only by subset_successor.
/// Throws DomainError "OutOfRange" when the sum exceeds the vocabulary.
std::size_t learner_addition(std::size_t n, std::size_t m, std::size_t vocabulary);

}  // namespace cognum::counting
