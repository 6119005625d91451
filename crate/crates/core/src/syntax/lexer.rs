use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Tok {
    Ident(String),
    Exists,
    Forall,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Bar,
    Amp,
    Bang,
    Arrow,
    Eq,
    Neq,
    Lt,
    End,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Exists => "`exists`".into(),
            Tok::Forall => "`forall`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Neq => "`!=`".into(),
            Tok::Lt => "`<`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(super) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

pub(super) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (start_line, start_column) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
            continue;
        }
        let tok = if is_ident_start(c) {
            let mut name = String::new();
            while chars.peek().is_some_and(|&c| is_ident_continue(c)) {
                name.push(bump(&mut chars));
            }
            match name.as_str() {
                "exists" => Tok::Exists,
                "forall" => Tok::Forall,
                _ => Tok::Ident(name),
            }
        } else {
            bump(&mut chars);
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '|' | '∨' => Tok::Bar,
                '&' | '∧' => Tok::Amp,
                '¬' => Tok::Bang,
                '→' => Tok::Arrow,
                '=' => Tok::Eq,
                '≠' => Tok::Neq,
                '<' => Tok::Lt,
                '∃' => Tok::Exists,
                '∀' => Tok::Forall,
                '!' if chars.peek() == Some(&'=') => {
                    bump(&mut chars);
                    Tok::Neq
                }
                '!' => Tok::Bang,
                '-' if chars.peek() == Some(&'>') => {
                    bump(&mut chars);
                    Tok::Arrow
                }
                other => {
                    return Err(ParseError::Syntax {
                        line: start_line,
                        column: start_column,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        };
        out.push(Token {
            tok,
            line: start_line,
            column: start_column,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        tokenize(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn operators_and_aliases() {
        assert_eq!(
            toks("x != y -> !a"),
            [
                Tok::Ident("x".into()),
                Tok::Neq,
                Tok::Ident("y".into()),
                Tok::Arrow,
                Tok::Bang,
                Tok::Ident("a".into()),
                Tok::End
            ]
        );
        assert_eq!(toks("∀∃∧∨¬→"), toks("forall exists & | ! ->"));
    }

    #[test]
    fn comments_and_positions() {
        let t = tokenize("# header\n  E(x', _y)").unwrap();
        assert_eq!(t[0].tok, Tok::Ident("E".into()));
        assert_eq!((t[0].line, t[0].column), (2, 3));
        assert_eq!(t[2].tok, Tok::Ident("x'".into()));
        assert_eq!(t[4].tok, Tok::Ident("_y".into()));
        let err = tokenize("x\n  $").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, column: 3, .. }));
    }
}
