#include "bnmm/parser.hpp"
#include "bnmm/errors.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <sstream>

namespace bnmm
{

namespace
{

enum class token_kind
{
    identifier,
    digits,
    colon,
    terminator, // ';' or newline
    negation,
    conjunction,
    disjunction,
    open_paren,
    close_paren,
    end
};

struct token
{
    token_kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool is_ident_start( char c ) { return std::isalpha( static_cast<unsigned char>( c ) ) || c == '_'; }
bool is_ident_char( char c ) { return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_'; }
bool is_digit( char c ) { return c >= '0' && c <= '9'; }

std::vector<token> tokenize( std::string_view text )
{
    std::vector<token> out;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t pos = 0;
    bool seen_content = false;

    auto push = [ & ]( token_kind kind, std::string s, std::size_t col ) {
        out.push_back( { kind, std::move( s ), line, col } );
    };

    while ( pos < text.size() )
    {
        const char c = text[ pos ];
        if ( c == '\n' )
        {
            push( token_kind::terminator, "\n", column );
            ++line;
            column = 1;
            ++pos;
            continue;
        }
        if ( c == ' ' || c == '\t' || c == '\r' )
        {
            ++pos;
            ++column;
            continue;
        }
        if ( c == '#' )
        {
            const auto eol = text.find( '\n', pos );
            const auto comment = text.substr( pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos );
            if ( !seen_content && comment.starts_with( "# bnmm" ) )
            {
                auto version = comment.substr( 6 );
                while ( !version.empty() && ( version.front() == ' ' || version.front() == '\t' ) )
                    version.remove_prefix( 1 );
                while ( !version.empty() && ( version.back() == ' ' || version.back() == '\r' ) )
                    version.remove_suffix( 1 );
                if ( version != "v1" )
                    throw parse_error( "unsupported format header '" + std::string( comment ) + "'", line, column );
            }
            column += comment.size();
            pos += comment.size();
            continue;
        }
        seen_content = true;
        const std::size_t start_col = column;
        if ( is_ident_start( c ) )
        {
            std::size_t end = pos;
            while ( end < text.size() && is_ident_char( text[ end ] ) )
                ++end;
            push( token_kind::identifier, std::string( text.substr( pos, end - pos ) ), start_col );
            column += end - pos;
            pos = end;
            continue;
        }
        if ( is_digit( c ) )
        {
            std::size_t end = pos;
            while ( end < text.size() && is_digit( text[ end ] ) )
                ++end;
            push( token_kind::digits, std::string( text.substr( pos, end - pos ) ), start_col );
            column += end - pos;
            pos = end;
            continue;
        }
        token_kind kind;
        switch ( c )
        {
            case ':': kind = token_kind::colon; break;
            case ';': kind = token_kind::terminator; break;
            case '!': kind = token_kind::negation; break;
            case '&': kind = token_kind::conjunction; break;
            case '|': kind = token_kind::disjunction; break;
            case '(': kind = token_kind::open_paren; break;
            case ')': kind = token_kind::close_paren; break;
            default:
                throw parse_error( std::string( "unexpected character '" ) + c + "'", line, column );
        }
        push( kind, std::string( 1, c ), start_col );
        ++pos;
        ++column;
    }
    out.push_back( { token_kind::end, "", line, column } );
    return out;
}

struct expr
{
    enum class kind
    {
        constant,
        variable,
        negation,
        conjunction,
        disjunction
    };

    kind k = kind::constant;
    int value = 0; // constant value or variable index
    std::vector<expr> children;

    [[nodiscard]] bool eval( int n, state_t x ) const
    {
        switch ( k )
        {
            case kind::constant: return value != 0;
            case kind::variable: return ( x & coordinate_bit( n, value ) ) != 0;
            case kind::negation: return !children.front().eval( n, x );
            case kind::conjunction:
                for ( const auto& c : children )
                    if ( !c.eval( n, x ) )
                        return false;
                return true;
            case kind::disjunction:
                for ( const auto& c : children )
                    if ( c.eval( n, x ) )
                        return true;
                return false;
        }
        return false;
    }

    // Prints with the minimal parentheses for NOT > AND > OR.
    [[nodiscard]] std::string str( const std::vector<std::string>& names, int parent_level = 0 ) const
    {
        switch ( k )
        {
            case kind::constant: return value ? "1" : "0";
            case kind::variable: return names[ static_cast<std::size_t>( value ) ];
            case kind::negation: return "!" + children.front().str( names, 3 );
            case kind::conjunction:
            case kind::disjunction:
            {
                const int level = k == kind::conjunction ? 2 : 1;
                const char* sep = k == kind::conjunction ? " & " : " | ";
                std::string s;
                for ( std::size_t c = 0; c < children.size(); ++c )
                {
                    if ( c != 0 )
                        s += sep;
                    s += children[ c ].str( names, level );
                }
                return parent_level > level ? "(" + s + ")" : s;
            }
        }
        return {};
    }
};

class expression_parser
{
    const std::vector<token>& _tokens;
    std::size_t _pos;
    std::size_t _end; // one past the last token of the declaration
    const std::map<std::string, int>& _names;

    [[nodiscard]] const token& peek() const { return _tokens[ _pos ]; }
    [[nodiscard]] bool at_end() const { return _pos >= _end; }

    [[noreturn]] void fail( const std::string& message ) const
    {
        const auto& t = _tokens[ std::min( _pos, _end ) ];
        throw parse_error( message, t.line, t.column );
    }

    expr parse_factor()
    {
        if ( at_end() )
            fail( "expected an operand" );
        const auto& t = peek();
        switch ( t.kind )
        {
            case token_kind::negation:
            {
                ++_pos;
                expr e;
                e.k = expr::kind::negation;
                e.children.push_back( parse_factor() );
                return e;
            }
            case token_kind::open_paren:
            {
                ++_pos;
                auto e = parse_or();
                if ( at_end() || peek().kind != token_kind::close_paren )
                    fail( "expected ')'" );
                ++_pos;
                return e;
            }
            case token_kind::identifier:
            {
                const auto it = _names.find( t.text );
                if ( it == _names.end() )
                    fail( "reference to undeclared component '" + t.text + "'" );
                ++_pos;
                return { expr::kind::variable, it->second, {} };
            }
            case token_kind::digits:
                if ( t.text != "0" && t.text != "1" )
                    fail( "constant must be 0 or 1, got '" + t.text + "'" );
                ++_pos;
                return { expr::kind::constant, t.text == "1" ? 1 : 0, {} };
            default: fail( "unexpected '" + t.text + "'" );
        }
    }

    expr parse_and()
    {
        auto first = parse_factor();
        if ( at_end() || peek().kind != token_kind::conjunction )
            return first;
        expr e;
        e.k = expr::kind::conjunction;
        e.children.push_back( std::move( first ) );
        while ( !at_end() && peek().kind == token_kind::conjunction )
        {
            ++_pos;
            e.children.push_back( parse_factor() );
        }
        return e;
    }

    expr parse_or()
    {
        auto first = parse_and();
        if ( at_end() || peek().kind != token_kind::disjunction )
            return first;
        expr e;
        e.k = expr::kind::disjunction;
        e.children.push_back( std::move( first ) );
        while ( !at_end() && peek().kind == token_kind::disjunction )
        {
            ++_pos;
            e.children.push_back( parse_and() );
        }
        return e;
    }

public:
    expression_parser( const std::vector<token>& tokens, std::size_t begin, std::size_t end,
                       const std::map<std::string, int>& names )
            : _tokens{ tokens }, _pos{ begin }, _end{ end }, _names{ names }
    {
    }

    expr parse()
    {
        auto e = parse_or();
        if ( !at_end() )
            fail( "unexpected '" + peek().text + "' after expression" );
        return e;
    }
};

struct statement
{
    std::size_t begin;
    std::size_t end;
};

std::vector<statement> split_statements( const std::vector<token>& tokens )
{
    std::vector<statement> out;
    std::size_t begin = 0;
    for ( std::size_t i = 0; i < tokens.size(); ++i )
    {
        if ( tokens[ i ].kind == token_kind::terminator || tokens[ i ].kind == token_kind::end )
        {
            if ( i > begin )
                out.push_back( { begin, i } );
            begin = i + 1;
        }
    }
    return out;
}

boolean_network parse_table( const std::vector<token>& tokens, const std::vector<statement>& statements,
                             const parse_options& options )
{
    const auto& header = statements.front();
    if ( header.end - header.begin != 2 )
        throw parse_error( "table header must be 'table <n>'", tokens[ header.begin ].line,
                           tokens[ header.begin ].column );
    const auto& size_token = tokens[ header.begin + 1 ];
    if ( size_token.text.size() > 3 )
        throw parse_error( "table dimension too large", size_token.line, size_token.column );
    const int n = std::stoi( size_token.text );
    if ( n < 1 )
        throw parse_error( "table dimension must be at least 1", size_token.line, size_token.column );
    if ( n > options.dimension_cap )
        throw cap_exceeded( "parse_network", options.dimension_cap, n );

    const auto rows = state_count( n );
    std::vector<state_t> images( rows, 0 );
    std::vector<bool> seen( rows, false );
    std::size_t filled = 0;
    for ( std::size_t s = 1; s < statements.size(); ++s )
    {
        const auto& st = statements[ s ];
        const auto& first = tokens[ st.begin ];
        if ( st.end - st.begin != 2 || tokens[ st.begin ].kind != token_kind::digits ||
             tokens[ st.begin + 1 ].kind != token_kind::digits )
            throw parse_error( "table row must be '<input bits> <output bits>'", first.line, first.column );
        const auto& in = tokens[ st.begin ];
        const auto& outp = tokens[ st.begin + 1 ];
        for ( const auto* t : { &in, &outp } )
        {
            if ( t->text.size() != static_cast<std::size_t>( n ) )
                throw parse_error( "expected " + std::to_string( n ) + " bits, got '" + t->text + "'", t->line,
                                   t->column );
            for ( char c : t->text )
                if ( c != '0' && c != '1' )
                    throw parse_error( "table bits must be 0 or 1", t->line, t->column );
        }
        const auto x = configuration::parse( in.text ).bits();
        if ( seen[ x ] )
            throw parse_error( "duplicate table row for input " + in.text, in.line, in.column );
        seen[ x ] = true;
        images[ x ] = configuration::parse( outp.text ).bits();
        ++filled;
    }
    if ( filled != rows )
    {
        const auto& last = tokens.back();
        throw parse_error( "table needs " + std::to_string( rows ) + " rows, got " + std::to_string( filled ),
                           last.line, last.column );
    }
    return { n, std::move( images ) };
}

} // namespace

boolean_network parse_network( std::string_view text, const parse_options& options )
{
    const auto tokens = tokenize( text );
    const auto statements = split_statements( tokens );
    if ( statements.empty() )
        throw parse_error( "no components declared", tokens.back().line, tokens.back().column );

    const auto& head = tokens[ statements.front().begin ];
    if ( head.kind == token_kind::identifier && head.text == "table" &&
         statements.front().end - statements.front().begin >= 2 &&
         tokens[ statements.front().begin + 1 ].kind == token_kind::digits )
        return parse_table( tokens, statements, options );

    std::map<std::string, int> names;
    std::vector<std::string> ordered;
    for ( const auto& st : statements )
    {
        const auto& name = tokens[ st.begin ];
        if ( name.kind != token_kind::identifier )
            throw parse_error( "expected a component name", name.line, name.column );
        if ( st.end - st.begin < 2 || tokens[ st.begin + 1 ].kind != token_kind::colon )
        {
            const auto& t = tokens[ std::min( st.begin + 1, st.end ) ];
            throw parse_error( "expected ':' after component name", t.line, t.column );
        }
        if ( !names.emplace( name.text, static_cast<int>( ordered.size() ) ).second )
            throw parse_error( "duplicate component '" + name.text + "'", name.line, name.column );
        ordered.push_back( name.text );
    }
    const int n = static_cast<int>( ordered.size() );
    if ( n > options.dimension_cap )
        throw cap_exceeded( "parse_network", options.dimension_cap, n );

    std::vector<expr> exprs;
    exprs.reserve( ordered.size() );
    for ( const auto& st : statements )
        exprs.push_back( expression_parser( tokens, st.begin + 2, st.end, names ).parse() );

    std::vector<state_t> images( state_count( n ), 0 );
    for ( state_t x = 0; x < images.size(); ++x )
        for ( int i = 0; i < n; ++i )
            if ( exprs[ static_cast<std::size_t>( i ) ].eval( n, x ) )
                images[ x ] |= coordinate_bit( n, i );

    network_source source;
    source.names = ordered;
    for ( const auto& e : exprs )
        source.expressions.push_back( e.str( ordered ) );
    return { n, std::move( images ), std::move( source ) };
}

std::string print_truth_table( const boolean_network& f )
{
    std::ostringstream out;
    const int n = f.dimension();
    out << "table " << n << '\n';
    for ( state_t x = 0; x < state_count( n ); ++x )
        out << bits_to_string( n, x ) << ' ' << bits_to_string( n, f.image( x ) ) << '\n';
    return out.str();
}

std::string print_network( const boolean_network& f )
{
    std::string out = "# bnmm v1\n";
    const auto& source = f.source();
    if ( source && source->expressions.size() == static_cast<std::size_t>( f.dimension() ) )
    {
        for ( int i = 0; i < f.dimension(); ++i )
            out += source->names[ static_cast<std::size_t>( i ) ] + ": " +
                   source->expressions[ static_cast<std::size_t>( i ) ] + '\n';
        return out;
    }
    return out + print_truth_table( f );
}

} // namespace bnmm
