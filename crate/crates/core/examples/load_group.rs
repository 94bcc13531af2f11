//! Group documents in both input formats.

use fuselab::io::load_group;

pub fn run() -> fuselab::Result<()> {
    let cayley = r#"{"format":"cayley","name":"C3","order":3,"table":[[0,1,2],[1,2,0],[2,0,1]]}"#;
    let perm = r#"{"format":"perm","name":"D8","degree":4,"generators":[[[1,2,3,4]],[[1,3]]]}"#;
    for doc in [cayley, perm] {
        let g = load_group(doc)?;
        println!("{}: order {}, abelian {}", g.name(), g.order(), g.is_abelian());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fuselab::Result<()> {
    run()
}
