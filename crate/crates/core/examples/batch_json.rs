//! Batch processing through the command-line entry point, in memory.

use std::io::Write;

fn main() -> std::io::Result<()> {
    let path = std::env::temp_dir().join("seifert-batch-example.txt");
    let mut f = std::fs::File::create(&path)?;
    writeln!(f, "# Brieskorn manifolds")?;
    writeln!(f, "0; -1; 2/1, 3/1, 7/1")?;
    writeln!(f, "0; -1; 2/1, 3/1, 11/2")?;
    writeln!(f, "not an index")?;
    drop(f);

    let path_arg = path.to_string_lossy().into_owned();
    for cmd in ["asym", "euler-check"] {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = seifert::cli::run(["seifert", cmd, "--batch", &path_arg], &mut out, &mut err);
        println!("$ seifert {cmd} --batch {path_arg}   (exit {code})");
        print!("{}", String::from_utf8_lossy(&out));
    }
    std::fs::remove_file(path)
}
