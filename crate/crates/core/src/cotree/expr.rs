//! Text form of cotrees.
//!
//! ```text
//! node := INT | "U(" node ("," node)* ")" | "J(" node ("," node)* ")"
//! ```
//!
//! An `INT` child stands for that many leaves at that position. Whitespace
//! is ignored and leaves are numbered left to right from 0.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Cotree, Kind, Node, NodeId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("empty node at byte {position}")]
    EmptyNode { position: usize },
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    nodes: Vec<Node>,
    next_leaf: usize,
}

/// A parsed child: either a run of leaves or a subtree root.
enum Item {
    Leaves(usize),
    Subtree(NodeId),
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.syntax(format!("expected '{}', found '{}'", byte as char, b as char))),
            None => Err(self.syntax(format!("expected '{}', found end of input", byte as char))),
        }
    }

    fn item(&mut self) -> Result<Item, ParseError> {
        match self.peek() {
            Some(b'U') | Some(b'J') => {
                let kind = if self.bytes[self.pos] == b'U' {
                    Kind::Union
                } else {
                    Kind::Join
                };
                self.pos += 1;
                self.expect(b'(')?;
                if self.peek() == Some(b')') {
                    return Err(ParseError::EmptyNode { position: self.pos });
                }
                let id = self.nodes.len();
                self.nodes.push(Node::Interior {
                    kind,
                    children: Vec::new(),
                });
                let mut children = Vec::new();
                loop {
                    match self.item()? {
                        Item::Leaves(count) => children.extend(self.push_leaves(count)),
                        Item::Subtree(child) => children.push(child),
                    }
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.syntax("expected ',' or ')'")),
                    }
                }
                if let Node::Interior { children: slot, .. } = &mut self.nodes[id] {
                    *slot = children;
                }
                Ok(Item::Subtree(id))
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
                let count: usize = text.parse().map_err(|_| ParseError::Syntax {
                    position: start,
                    message: format!("leaf count {text} too large"),
                })?;
                if count == 0 {
                    return Err(ParseError::Syntax {
                        position: start,
                        message: "leaf count must be at least 1".into(),
                    });
                }
                Ok(Item::Leaves(count))
            }
            Some(b) => Err(self.syntax(format!("unexpected '{}'", b as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn push_leaves(&mut self, count: usize) -> Vec<NodeId> {
        (0..count)
            .map(|_| {
                self.nodes.push(Node::Leaf(self.next_leaf));
                self.next_leaf += 1;
                self.nodes.len() - 1
            })
            .collect()
    }
}

impl Cotree {
    /// Parses the expression grammar and normalizes the result.
    pub fn parse(text: &str) -> Result<Cotree, ParseError> {
        let mut parser = Parser {
            bytes: text.as_bytes(),
            pos: 0,
            nodes: Vec::new(),
            next_leaf: 0,
        };
        let root = match parser.item()? {
            Item::Subtree(id) => id,
            Item::Leaves(1) => parser.push_leaves(1)[0],
            Item::Leaves(_) => {
                return Err(ParseError::Syntax {
                    position: 0,
                    message: "a bare leaf count above 1 needs an enclosing U(...) or J(...)".into(),
                })
            }
        };
        if parser.peek().is_some() {
            return Err(parser.syntax("trailing input"));
        }
        Ok(Cotree::from_raw_parts(parser.nodes, root).normalize())
    }

    /// Grammar form with consecutive leaf siblings collapsed into a count.
    /// Leaf ids are not encoded, so parsing the output yields the tree with
    /// leaves renumbered left to right.
    pub fn render(&self) -> String {
        enum Step {
            Open(NodeId),
            Count(usize),
            Text(&'static str),
        }
        let mut out = String::new();
        let mut stack = vec![Step::Open(self.root())];
        while let Some(step) = stack.pop() {
            match step {
                Step::Text(s) => out.push_str(s),
                Step::Count(c) => out.push_str(&c.to_string()),
                Step::Open(id) => match self.node(id) {
                    Node::Leaf(_) => out.push('1'),
                    Node::Interior { kind, children } => {
                        out.push(kind.symbol());
                        out.push('(');
                        // group runs of leaf children into counts
                        let mut items: Vec<Step> = Vec::new();
                        for &c in children {
                            match (self.node(c).is_leaf(), items.last_mut()) {
                                (true, Some(Step::Count(run))) => *run += 1,
                                (true, _) => items.push(Step::Count(1)),
                                (false, _) => items.push(Step::Open(c)),
                            }
                        }
                        let mut parts = Vec::with_capacity(2 * items.len());
                        for (i, item) in items.into_iter().enumerate() {
                            if i > 0 {
                                parts.push(Step::Text(","));
                            }
                            parts.push(item);
                        }
                        parts.push(Step::Text(")"));
                        stack.extend(parts.into_iter().rev());
                    }
                },
            }
        }
        out
    }
}

impl FromStr for Cotree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Cotree::parse(s)
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
