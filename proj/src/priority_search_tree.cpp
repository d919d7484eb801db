#include "boxph/priority_search_tree.hpp"

#include <stdexcept>
#include <utility>

namespace boxph {

struct PrioritySearchTree::Node {
    PstEntry entry;
    std::uint64_t priority = 0;
    NodePtr left;
    NodePtr right;
    const PstEntry* best = nullptr;  // min (z, x1) entry of this subtree
    std::size_t count = 1;

    double key() const { return entry.rect.x1; }
};

namespace {

bool lower(const PstEntry& a, const PstEntry& b) {
    if (a.point.z != b.point.z) return a.point.z < b.point.z;
    return a.rect.x1 < b.rect.x1;
}

}  // namespace

PrioritySearchTree::PrioritySearchTree(std::uint64_t seed) : rng_(seed) {}
PrioritySearchTree::~PrioritySearchTree() = default;
PrioritySearchTree::PrioritySearchTree(PrioritySearchTree&&) noexcept = default;
PrioritySearchTree& PrioritySearchTree::operator=(PrioritySearchTree&&) noexcept = default;

void PrioritySearchTree::update(Node* node) {
    node->best = &node->entry;
    node->count = 1;
    for (Node* child : {node->left.get(), node->right.get()}) {
        if (!child) continue;
        node->count += child->count;
        if (lower(*child->best, *node->best)) node->best = child->best;
    }
}

void PrioritySearchTree::split(NodePtr root, double key, NodePtr& less, NodePtr& rest) {
    if (!root) {
        less.reset();
        rest.reset();
        return;
    }
    if (root->key() < key) {
        NodePtr r_less;
        split(std::move(root->right), key, r_less, rest);
        root->right = std::move(r_less);
        update(root.get());
        less = std::move(root);
    } else {
        NodePtr l_rest;
        split(std::move(root->left), key, less, l_rest);
        root->left = std::move(l_rest);
        update(root.get());
        rest = std::move(root);
    }
}

PrioritySearchTree::NodePtr PrioritySearchTree::merge(NodePtr a, NodePtr b) {
    if (!a) return b;
    if (!b) return a;
    if (a->priority > b->priority) {
        a->right = merge(std::move(a->right), std::move(b));
        update(a.get());
        return a;
    }
    b->left = merge(std::move(a), std::move(b->left));
    update(b.get());
    return b;
}

PrioritySearchTree::NodePtr PrioritySearchTree::pop_leftmost(NodePtr& root) {
    if (!root->left) {
        NodePtr out = std::move(root);
        root = std::move(out->right);
        return out;
    }
    NodePtr out = pop_leftmost(root->left);
    update(root.get());
    return out;
}

PrioritySearchTree::NodePtr PrioritySearchTree::erase_key(NodePtr root, double key,
                                                          NodePtr& removed) {
    if (!root) return nullptr;
    if (key < root->key()) {
        root->left = erase_key(std::move(root->left), key, removed);
    } else if (root->key() < key) {
        root->right = erase_key(std::move(root->right), key, removed);
    } else {
        NodePtr rest = merge(std::move(root->left), std::move(root->right));
        removed = std::move(root);
        return rest;
    }
    update(root.get());
    return root;
}

void PrioritySearchTree::insert(const PstEntry& entry) {
    auto node = std::make_unique<Node>();
    node->entry = entry;
    node->priority = rng_();
    update(node.get());
    NodePtr less;
    NodePtr rest;
    split(std::move(root_), entry.rect.x1, less, rest);
    root_ = merge(merge(std::move(less), std::move(node)), std::move(rest));
}

bool PrioritySearchTree::empty() const { return !root_; }

std::size_t PrioritySearchTree::size() const { return root_ ? root_->count : 0; }

const PstEntry& PrioritySearchTree::top() const {
    if (!root_) throw std::logic_error("PrioritySearchTree::top on empty tree");
    return *root_->best;
}

PstPop PrioritySearchTree::pop_min() {
    if (!root_) throw std::logic_error("PrioritySearchTree::pop_min on empty tree");
    if (top().marked()) throw std::logic_error("PrioritySearchTree::pop_min: root is marked");

    const double key = top().rect.x1;
    NodePtr removed;
    root_ = erase_key(std::move(root_), key, removed);
    const PstEntry q = removed->entry;

    NodePtr less;
    NodePtr rest;
    split(std::move(root_), q.point.x, less, rest);
    while (rest) {
        const Node* first = rest.get();
        while (first->left) first = first->left.get();
        const Rect& r = first->entry.rect;
        if (!(q.point.x < r.x2 && q.point.y < r.y2)) break;
        pop_leftmost(rest);
    }

    PstPop out;
    out.popped = q;
    out.left = {q.rect.x1, q.point.x, q.rect.y1, q.rect.y2};
    out.right = {q.point.x, std::numeric_limits<double>::infinity(), q.rect.y1, q.point.y};
    if (rest) {
        const Node* first = rest.get();
        while (first->left) first = first->left.get();
        out.right.x2 = first->entry.rect.x1;
        out.right.y1 = first->entry.rect.y1;
    }
    root_ = merge(std::move(less), std::move(rest));
    return out;
}

std::vector<PstEntry> PrioritySearchTree::entries() const {
    std::vector<PstEntry> out;
    std::vector<const Node*> stack;
    const Node* cur = root_.get();
    while (cur || !stack.empty()) {
        while (cur) {
            stack.push_back(cur);
            cur = cur->left.get();
        }
        cur = stack.back();
        stack.pop_back();
        out.push_back(cur->entry);
        cur = cur->right.get();
    }
    return out;
}

bool PrioritySearchTree::check_invariants() const {
    const std::vector<PstEntry> all = entries();
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (!(all[i - 1].rect.x1 < all[i].rect.x1)) return false;
        if (all[i - 1].rect.x2 > all[i].rect.x1) return false;
    }
    // cached minima
    std::vector<const Node*> stack;
    if (root_) stack.push_back(root_.get());
    while (!stack.empty()) {
        const Node* node = stack.back();
        stack.pop_back();
        for (const Node* child : {node->left.get(), node->right.get()}) {
            if (!child) continue;
            if (lower(*child->best, *node->best)) return false;
            stack.push_back(child);
        }
        if (lower(node->entry, *node->best)) return false;
    }
    return true;
}

}  // namespace boxph
