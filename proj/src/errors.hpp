#pragma once

#include <stdexcept>
#include <string>

namespace finsent {

// Every failure the library reports carries one of these kinds. The kind is
// stable API surface: tests and the C boundary dispatch on it.
enum class ErrorKind {
    io_error,
    malformed_record,
    duplicate_id,
    unparseable_date,
    non_positive_price,
    duplicate_date,
    after_series_end,
    overlapping_entry,
    empty_vocabulary,
    single_class_training,
    vocabulary_mismatch,
    too_few_instances,
    degenerate_split,
    empty_prediction_set,
    insufficient_data,
    empty_series,
    config_error,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    const char* kind_name() const { return error_kind_name(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, std::string message) {
    throw Error(kind, std::move(message));
}

}  // namespace finsent
