#include <pwind/search.hh>

auto pwind::outcome_name(Outcome o) -> std::string_view
{
    switch (o) {
    case Outcome::Found: return "found";
    case Outcome::Absent: return "absent";
    case Outcome::Exhausted: return "exhausted";
    }
    return "unknown";
}
