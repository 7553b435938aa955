#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace onesided {

enum class EventKind { Cup, Cap, Sigma, Handle };

// One Morse event.  Words are read bottom (handlebody side) to top (N(U)
// side); positions are 1-based strand indices at the moment of the event.
//   cap i          birth of two adjacent strands at positions i, i+1   (+2)
//   cup i          death joining adjacent strands i, i+1               (-2)
//   sigma i +/-    elementary crossing of strands i, i+1
//   handle a|b r i strand i traverses surface generator a_r or b_r
struct Event {
    EventKind kind = EventKind::Sigma;
    int position = 1;
    int sign = +1;          // sigma only
    char handle_kind = 'a';  // handle only
    int handle_index = 1;   // handle only

    static Event cup(int i);
    static Event cap(int i);
    static Event sigma(int i, int sign);
    static Event handle(char kind, int r, int i);

    bool operator==(const Event&) const = default;
};

std::string event_to_string(const Event& e);

struct MorseWord {
    int surface_genus = 0;
    int start_strands = 0;
    std::vector<Event> events;
    int end_strands = 0;

    bool closed() const { return start_strands == 0 && end_strands == 0; }
    bool operator==(const MorseWord&) const = default;
};

enum class WordError { IndexOutOfRange, NegativeStrands, GenusExceeded };

class invalid_word : public std::invalid_argument {
public:
    invalid_word(WordError kind, int step, const std::string& what)
        : std::invalid_argument(what), kind_(kind), step_(step) {}
    WordError kind() const { return kind_; }
    int step() const { return step_; }  // 0-based index of the offending event

private:
    WordError kind_;
    int step_;
};

// Type-checks the event list and computes end_strands; throws invalid_word
// locating the first ill-typed event.  A cup on fewer than two strands is
// NegativeStrands; any position outside the live range is IndexOutOfRange
// (checked before the handle generator range, which is GenusExceeded).
MorseWord validate_word(std::vector<Event> events, int surface_genus, int start_strands);

// Connectivity of the 1-manifold described by the word: closed curves plus
// boundary-to-boundary arcs.  For open words `pairing` is the fixed-point-free
// involution induced on boundary endpoints; bottom endpoints are numbered
// 1..start_strands, top endpoints start_strands+1 .. start_strands+end_strands.
struct TraceResult {
    int component_count = 0;
    std::vector<std::pair<int, int>> pairing;

    bool operator==(const TraceResult&) const = default;
};

TraceResult trace(const MorseWord& word);

}  // namespace onesided
