#include "errors.hpp"

namespace finsent {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::io_error: return "io_error";
        case ErrorKind::malformed_record: return "malformed_record";
        case ErrorKind::duplicate_id: return "duplicate_id";
        case ErrorKind::unparseable_date: return "unparseable_date";
        case ErrorKind::non_positive_price: return "non_positive_price";
        case ErrorKind::duplicate_date: return "duplicate_date";
        case ErrorKind::after_series_end: return "after_series_end";
        case ErrorKind::overlapping_entry: return "overlapping_entry";
        case ErrorKind::empty_vocabulary: return "empty_vocabulary";
        case ErrorKind::single_class_training: return "single_class_training";
        case ErrorKind::vocabulary_mismatch: return "vocabulary_mismatch";
        case ErrorKind::too_few_instances: return "too_few_instances";
        case ErrorKind::degenerate_split: return "degenerate_split";
        case ErrorKind::empty_prediction_set: return "empty_prediction_set";
        case ErrorKind::insufficient_data: return "insufficient_data";
        case ErrorKind::empty_series: return "empty_series";
        case ErrorKind::config_error: return "config_error";
    }
    return "unknown";
}

}  // namespace finsent
