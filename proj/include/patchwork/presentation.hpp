#pragma once

#include <patchwork/group.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace patchwork {

struct Letter
{
    std::size_t generator;
    bool inverse = false;

    friend auto operator==(const Letter &, const Letter &) -> bool = default;
};

using Word = std::vector<Letter>;

/// Generators and relators of a finitely presented group. Relators are words
/// that must evaluate to the identity.
class Presentation
{
public:
    Presentation() = default;
    explicit Presentation(std::vector<std::string> generators);

    auto add_generator(std::string name) -> std::size_t;
    /// Throws unless every letter names a declared generator.
    void add_relator(Word relator);

    auto generators() const -> const std::vector<std::string> & { return generators_; }
    auto relators() const -> const std::vector<Word> & { return relators_; }
    auto generator_index(const std::string & name) const -> std::size_t;

    /// Renders a relator as space-separated symbols, inverses suffixed with ^-1.
    auto format(const Word & w) const -> std::string;

private:
    std::vector<std::string> generators_;
    std::vector<Word> relators_;
};

/// Generator images, one target element per generator.
using Assignment = std::vector<Element>;

auto evaluate(const Word & w, const Assignment & images, const FiniteGroup & target) -> Element;

/**
 * Every assignment of target elements to the generators under which all
 * relators evaluate to the identity. Depth-first over generators in declared
 * order, checking each relator as soon as its last generator is assigned, so
 * the output is in lexicographic order of image tuples.
 */
auto enumerate_homs(const Presentation & source, const FiniteGroup & target) -> std::vector<Assignment>;

/// Counting variant of enumerate_homs that does not materialise the assignments.
auto count_homs(const Presentation & source, const FiniteGroup & target) -> std::size_t;

} // namespace patchwork
