//! Plain-text rendering of the staircase region of a ladder.

use crate::ladder::Ladder;

impl Ladder {
    /// Draws the strictly upper region row by row: corner cells carry the
    /// corner index (mod 10), other ladder cells '#', holes '.', and the
    /// diagonal '\'. A legend line lists the corners.
    pub fn render_ascii(&self) -> String {
        let n = self.n();
        let mut lines = Vec::with_capacity(n + 1);
        for i in 1..=n {
            let mut row = String::with_capacity(n);
            row.push_str(&" ".repeat(i - 1));
            row.push('\\');
            for j in (i + 1)..=n {
                let label = self
                    .corners()
                    .iter()
                    .position(|c| (c.a, c.b) == (i, j))
                    .map(|k| char::from_digit(((k + 1) % 10) as u32, 10).unwrap());
                if let Some(ch) = label {
                    row.push(ch);
                } else if self.contains(i, j) {
                    row.push('#');
                } else {
                    row.push('.');
                }
            }
            lines.push(row);
        }
        let legend: Vec<String> = self
            .corners()
            .iter()
            .map(|c| format!("({},{})", c.a, c.b))
            .collect();
        lines.push(format!("corners: {}", legend.join(" ")));
        lines.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_square_is_a_plain_box() {
        let l = Ladder::new(4, &[(1, 4)]).unwrap();
        let expected = "\\##1\n \\##\n  \\#\n   \\\ncorners: (1,4)";
        assert_eq!(l.render_ascii(), expected);
    }

    #[test]
    fn notched_square_has_one_hole() {
        let l = Ladder::new(6, &[(1, 5), (2, 6)]).unwrap();
        let r = l.render_ascii();
        assert!(r.starts_with("\\###1.\n \\###2\n"));
        assert!(r.ends_with("corners: (1,5) (2,6)"));
    }

    #[test]
    fn staircase_renders_both_steps() {
        let l = Ladder::new(7, &[(1, 3), (2, 6), (3, 7)]).unwrap();
        let r = l.render_ascii();
        let rows: Vec<&str> = r.lines().collect();
        assert_eq!(rows[0], "\\#1....");
        assert_eq!(rows[1], " \\###2.");
        assert_eq!(rows[2], "  \\###3");
    }
}
