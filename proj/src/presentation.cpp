#include <patchwork/presentation.hpp>
#include <patchwork/error.hpp>

#include <algorithm>
#include <functional>

namespace patchwork {

Presentation::Presentation(std::vector<std::string> generators)
{
    for (auto & g : generators)
        add_generator(std::move(g));
}

auto Presentation::add_generator(std::string name) -> std::size_t
{
    if (std::find(generators_.begin(), generators_.end(), name) != generators_.end())
        throw Error("duplicate generator " + name);
    generators_.push_back(std::move(name));
    return generators_.size() - 1;
}

void Presentation::add_relator(Word relator)
{
    for (auto & l : relator)
        if (l.generator >= generators_.size())
            throw Error("relator uses undeclared generator #" + std::to_string(l.generator));
    relators_.push_back(std::move(relator));
}

auto Presentation::generator_index(const std::string & name) const -> std::size_t
{
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end())
        throw Error("unknown generator " + name);
    return static_cast<std::size_t>(it - generators_.begin());
}

auto Presentation::format(const Word & w) const -> std::string
{
    if (w.empty())
        return "1";
    std::string out;
    for (auto & l : w) {
        if (! out.empty())
            out += ' ';
        out += generators_.at(l.generator);
        if (l.inverse)
            out += "^-1";
    }
    return out;
}

auto evaluate(const Word & w, const Assignment & images, const FiniteGroup & target) -> Element
{
    Element x = target.identity();
    for (auto & l : w) {
        const Element g = images[l.generator];
        x = target.mul(x, l.inverse ? target.inv(g) : g);
    }
    return x;
}

namespace {

template <typename Visit>
void search(const Presentation & source, const FiniteGroup & target, Visit && visit)
{
    const std::size_t n = source.generators().size();

    // relators bucketed by the deepest generator they mention
    std::vector<std::vector<const Word *>> closing(n + 1);
    for (auto & r : source.relators()) {
        if (r.empty())
            continue;
        std::size_t deepest = 0;
        for (auto & l : r)
            deepest = std::max(deepest, l.generator);
        closing[deepest].push_back(&r);
    }

    Assignment images(n, target.identity());
    std::function<void(std::size_t)> descend = [&](std::size_t depth) {
        if (depth == n) {
            visit(images);
            return;
        }
        for (Element x = 0; x < target.order(); ++x) {
            images[depth] = x;
            bool ok = true;
            for (const Word * r : closing[depth])
                if (evaluate(*r, images, target) != target.identity()) {
                    ok = false;
                    break;
                }
            if (ok)
                descend(depth + 1);
        }
    };
    descend(0);
}

} // namespace

auto enumerate_homs(const Presentation & source, const FiniteGroup & target) -> std::vector<Assignment>
{
    std::vector<Assignment> result;
    search(source, target, [&](const Assignment & a) { result.push_back(a); });
    return result;
}

auto count_homs(const Presentation & source, const FiniteGroup & target) -> std::size_t
{
    std::size_t count = 0;
    search(source, target, [&](const Assignment &) { ++count; });
    return count;
}

} // namespace patchwork
