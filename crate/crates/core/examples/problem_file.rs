//! Reading and writing problem files.
use quiver_orbit::problem::Problem;

const TEXT: &str = "\
[quiver]
vertices = 1 2
arrow a = 1 -> 2
arrow b = 2 -> 1

[relations]
zero = a b
zero = b a

[auto phi]
jump = 1
scale a = 2
scale b = 3
lambda 0 2 = -1/4
";

fn main() -> quiver_orbit::Result<()> {
    let p = Problem::parse(TEXT)?;
    let alg = p.algebra()?;
    let phi = p.auto(&alg, "phi")?;
    println!("dim A = {}, jump = {}", alg.dim(), phi.jump());
    print!("{}", p.to_text());
    assert_eq!(Problem::parse(&p.to_text())?, p);
    if let Err(e) = Problem::parse("[quiver]\nvertices = 1\narrow a = 1 -> 9\n") {
        println!("rejected: {e}");
    }
    Ok(())
}
