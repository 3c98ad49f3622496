import pytest

from greenlint.rules.base import RuleId
from greenlint.rules.recycle import DEFAULT_FACTORIES, ResourceFactory, apply_recycle

from conftest import fix_java, parse_java


def test_golden_transformation(golden):
    before, after = golden("recycle")
    result, fixed = fix_java(apply_recycle, before)
    assert len(result.findings) == 1
    assert result.findings[0].rule is RuleId.RECYCLE
    assert result.findings[0].fixable
    assert fixed == after


def test_idempotent_on_output(golden):
    _, after = golden("recycle")
    result, fixed = fix_java(apply_recycle, after)
    assert result.findings == []
    assert fixed == after


def _method(body: str) -> bytes:
    return (
        "class C {\n"
        "    void m(AttributeSet attrs) {\n"
        + "".join("        " + line.strip() + "\n" for line in body.strip().splitlines())
        + "    }\n}\n"
    ).encode()


def test_returned_resource_is_unfixable():
    source = (
        b"class C {\n"
        b"    TypedArray m(AttributeSet attrs) {\n"
        b"        TypedArray a = getContext().obtainStyledAttributes(attrs, STYLE);\n"
        b"        return a;\n"
        b"    }\n"
        b"}\n"
    )
    result = apply_recycle(parse_java(source))
    assert len(result.findings) == 1
    assert not result.findings[0].fixable
    assert "escapes" in result.findings[0].message
    assert len(result.edits) == 0


@pytest.mark.parametrize(
    "body",
    [
        "TypedArray a = getContext().obtainStyledAttributes(attrs, S); use(a);",
        "TypedArray a = getContext().obtainStyledAttributes(attrs, S); TypedArray b = a;",
        "TypedArray a = getContext().obtainStyledAttributes(attrs, S); a = other();",
    ],
)
def test_escaping_resources_are_unfixable(body):
    result = apply_recycle(parse_java(_method(body)))
    assert len(result.findings) == 1
    assert not result.findings[0].fixable


@pytest.mark.parametrize(
    "body",
    [
        "TypedArray a = getContext().obtainStyledAttributes(attrs, S); a.recycle();",
        "Cursor c = db.query(T, null, null, null, null, null, null); c.close();",
        "TypedArray a, b;",  # multiple declarators are never touched
        "Object a = getContext().obtainThing(attrs);",  # unknown factory
        "MotionEvent e = copy.obtain(src);",  # wrong receiver for obtain
    ],
)
def test_released_or_non_matching_left_alone(body):
    result = apply_recycle(parse_java(_method(body)))
    assert result.findings == []


def test_motion_event_obtain_release_appended():
    source = _method("MotionEvent e = MotionEvent.obtain(src); handle(e.getX());")
    result, fixed = fix_java(apply_recycle, source)
    assert len(result.findings) == 1
    assert (
        b"        if (e != null) {\n"
        b"            e.recycle();\n"
        b"        }\n"
        b"    }\n"
    ) in fixed
    check, again = fix_java(apply_recycle, fixed)
    assert check.findings == []
    assert again == fixed


def test_cursor_release_inserted_before_trailing_return():
    source = (
        b"class C {\n"
        b"    int m(SQLiteDatabase db) {\n"
        b"        Cursor c = db.rawQuery(SQL, null);\n"
        b"        int n = c.getCount();\n"
        b"        return n;\n"
        b"    }\n"
        b"}\n"
    )
    result, fixed = fix_java(apply_recycle, source)
    assert len(result.findings) == 1
    assert (
        b"        if (c != null) {\n"
        b"            c.close();\n"
        b"        }\n"
        b"        return n;\n"
    ) in fixed


def test_cursor_type_required_for_query():
    source = _method("Result r = api.query(Q);")
    result = apply_recycle(parse_java(source))
    assert result.findings == []


def test_custom_factory_extension():
    factories = DEFAULT_FACTORIES + (
        ResourceFactory("openSession", "dispose", declared_type="Session"),
    )
    source = _method("Session s = pool.openSession(); s.use();")
    result, fixed = fix_java(apply_recycle, source, factories=factories)
    assert len(result.findings) == 1
    assert b"s.dispose();" in fixed
