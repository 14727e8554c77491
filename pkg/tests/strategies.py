from hypothesis import strategies as st

from stinv.terms import (
    AND, BIGAND, BIGOR, FALSE, IMPLIES, NOT, OR, TRUE, OccupyBox, OccupyPoint, Owner, TimePoint,
)

small = st.integers(-6, 6)
labels = st.sampled_from(["a", "b", "cloud", "mountain"])

atoms = st.one_of(
    st.just(TRUE()), st.just(FALSE()),
    st.builds(TimePoint, st.integers(0, 5)),
    st.builds(Owner, labels),
    st.builds(OccupyPoint, small, small),
    st.builds(OccupyBox, small, small, small, small),
)

terms = st.recursive(
    atoms,
    lambda kids: st.one_of(
        st.builds(NOT, kids),
        st.builds(AND, kids, kids),
        st.builds(OR, kids, kids),
        st.builds(IMPLIES, kids, kids),
        st.builds(BIGAND, st.lists(kids, max_size=4)),
        st.builds(BIGOR, st.lists(kids, max_size=4)),
    ),
    max_leaves=25,
)

boxes = st.builds(OccupyBox, st.integers(-50, 50), st.integers(-50, 50),
                  st.integers(-50, 50), st.integers(-50, 50))
